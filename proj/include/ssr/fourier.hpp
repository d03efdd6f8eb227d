#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "ssr/grid.hpp"

namespace ssr {

// Plain DFT, kernel exp(sign * 2*pi*i * k*m / N), no scaling.
Eigen::VectorXcd dft(const Eigen::VectorXcd& v, int sign);

// Samples embedded centrally into a grid enlarged by an integer factor,
// zeros outside.  The enlarged grid keeps the step.
std::pair<UniformGrid1D, Eigen::VectorXcd> pad_centered(const Eigen::VectorXcd& values,
                                                        const UniformGrid1D& grid, int factor);

struct FourierResult {
    UniformGrid1D grid; // centered dual grid, step 1/(hbar * N * input step)
    Eigen::VectorXcd values;
};

// out_k = step * sum_j v_j exp(sign * 2*pi*i*hbar * x_k * u_j) with
// x_k = (k - N/2) / (hbar * N * step).  Exact rearrangement of one FFT.
FourierResult centered_fourier(const Eigen::VectorXcd& values, const UniformGrid1D& grid,
                               double hbar, int sign);

// Fourier transform along the first index (the u axis) of a 2D array whose
// columns are u-profiles; the second index is carried along.  Input columns
// are zero-padded by pad_factor before the transform.
struct PartialFourierResult {
    UniformGrid1D x_grid;
    Eigen::MatrixXcd values; // (x index, column index)
};

PartialFourierResult partial_fourier(const Eigen::MatrixXcd& values, const UniformGrid1D& u_grid,
                                     double hbar, int sign = -1, int pad_factor = 2);

// d^order/du^order by Fourier multiplier; the Nyquist mode is zeroed for odd
// orders.  Accurate for signals that decay inside the window.
Eigen::VectorXcd spectral_derivative(const Eigen::VectorXcd& values, const UniformGrid1D& grid,
                                     int order = 1);

// Trigonometric interpolation.  interpolation_spectrum returns centered
// Fourier coefficients (index m holds mode k = m - N/2); interpolant_eval
// evaluates the band-limited periodic extension at one point in O(N).
// Callers must keep arguments inside the grid window.
Eigen::VectorXcd interpolation_spectrum(const Eigen::VectorXcd& values);
std::complex<double> interpolant_eval(const UniformGrid1D& grid, const Eigen::VectorXcd& spectrum,
                                      double u);

} // namespace ssr
