#include "ssr/fourier.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "ssr/errors.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

Eigen::VectorXcd dft(const Eigen::VectorXcd& v, int sign) {
    Eigen::FFT<double> fft;
    Eigen::VectorXcd out(v.size());
    if (sign == -1) {
        fft.fwd(out, v);
    } else if (sign == 1) {
        Eigen::VectorXcd tmp = v.conjugate();
        fft.fwd(out, tmp);
        out = out.conjugate();
    } else {
        throw InvalidSpecError("dft: sign must be +1 or -1");
    }
    return out;
}

std::pair<UniformGrid1D, Eigen::VectorXcd> pad_centered(const Eigen::VectorXcd& values,
                                                        const UniformGrid1D& grid, int factor) {
    if (values.size() != grid.count()) {
        throw GridMismatchError("pad_centered: value count does not match grid");
    }
    if (factor < 1) {
        throw InvalidSpecError("pad_centered: factor must be >= 1");
    }
    const Eigen::Index n = grid.count();
    const Eigen::Index m = n * factor;
    const Eigen::Index offset = (m - n) / 2;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(m);
    out.segment(offset, n) = values;
    UniformGrid1D wide(grid.start() - static_cast<double>(offset) * grid.step(), grid.step(), m);
    return {wide, std::move(out)};
}

FourierResult centered_fourier(const Eigen::VectorXcd& values, const UniformGrid1D& grid,
                               double hbar, int sign) {
    if (values.size() != grid.count()) {
        throw GridMismatchError("centered_fourier: value count does not match grid");
    }
    if (grid.count() % 2 != 0) {
        throw InvalidSpecError("centered_fourier: grid count must be even");
    }
    if (!(hbar > 0.0)) {
        throw InvalidSpecError("centered_fourier: hbar must be positive");
    }
    const Eigen::Index n = grid.count();
    const double step = grid.step();
    const double a = grid.start();

    Eigen::VectorXcd q(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        q[m] = (m % 2 == 0) ? values[m] : -values[m];
    }
    Eigen::VectorXcd f = dft(q, sign);

    const double dual_step = 1.0 / (hbar * static_cast<double>(n) * step);
    UniformGrid1D dual(-dual_step * static_cast<double>(n / 2), dual_step, n);

    const double base = 2.0 * kPi * a / (static_cast<double>(n) * step);
    Eigen::VectorXcd out(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double phase = static_cast<double>(sign) * base * static_cast<double>(k - n / 2);
        out[k] = step * std::polar(1.0, phase) * f[k];
    }
    return {dual, std::move(out)};
}

PartialFourierResult partial_fourier(const Eigen::MatrixXcd& values, const UniformGrid1D& u_grid,
                                     double hbar, int sign, int pad_factor) {
    if (values.rows() != u_grid.count()) {
        throw GridMismatchError("partial_fourier: row count does not match u grid");
    }
    const auto [wide, probe] =
        pad_centered(Eigen::VectorXcd::Zero(u_grid.count()), u_grid, pad_factor);
    const Eigen::Index m = wide.count();
    const Eigen::Index offset = (m - u_grid.count()) / 2;

    Eigen::MatrixXcd out(m, values.cols());
    Eigen::FFT<double> fft;
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(m);
    Eigen::VectorXcd tf(m);

    // Precompute the centered-transform twiddles once; columns share them.
    const double base = 2.0 * kPi * wide.start() / (static_cast<double>(m) * wide.step());
    Eigen::VectorXcd post(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double phase = static_cast<double>(sign) * base * static_cast<double>(k - m / 2);
        post[k] = wide.step() * std::polar(1.0, phase);
    }

    for (Eigen::Index c = 0; c < values.cols(); ++c) {
        col.setZero();
        col.segment(offset, u_grid.count()) = values.col(c);
        for (Eigen::Index j = 1; j < m; j += 2) col[j] = -col[j];
        if (sign == -1) {
            fft.fwd(tf, col);
        } else {
            col = col.conjugate().eval();
            fft.fwd(tf, col);
            tf = tf.conjugate().eval();
        }
        out.col(c) = post.cwiseProduct(tf);
    }

    const double dual_step = 1.0 / (hbar * static_cast<double>(m) * wide.step());
    UniformGrid1D dual(-dual_step * static_cast<double>(m / 2), dual_step, m);
    return {dual, std::move(out)};
}

Eigen::VectorXcd spectral_derivative(const Eigen::VectorXcd& values, const UniformGrid1D& grid,
                                     int order) {
    if (values.size() != grid.count()) {
        throw GridMismatchError("spectral_derivative: value count does not match grid");
    }
    if (order < 1) {
        throw InvalidSpecError("spectral_derivative: order must be >= 1");
    }
    const Eigen::Index n = grid.count();
    const double period = grid.length();
    Eigen::VectorXcd c = dft(values, -1);
    for (Eigen::Index k = 0; k < n; ++k) {
        double freq;
        if (2 * k < n) {
            freq = static_cast<double>(k);
        } else if (2 * k == n) {
            if (order % 2 == 1) {
                c[k] = 0.0;
                continue;
            }
            freq = static_cast<double>(k); // sign irrelevant at even order
        } else {
            freq = static_cast<double>(k - n);
        }
        const std::complex<double> mult =
            std::pow(std::complex<double>(0.0, 2.0 * kPi * freq / period), order);
        c[k] *= mult;
    }
    return dft(c, 1) / static_cast<double>(n);
}

Eigen::VectorXcd interpolation_spectrum(const Eigen::VectorXcd& values) {
    const Eigen::Index n = values.size();
    Eigen::VectorXcd c = dft(values, -1) / static_cast<double>(n);
    Eigen::VectorXcd centered(n);
    for (Eigen::Index m = 0; m < n; ++m) {
        centered[m] = c[(m + n / 2) % n];
    }
    return centered;
}

std::complex<double> interpolant_eval(const UniformGrid1D& grid, const Eigen::VectorXcd& spectrum,
                                      double u) {
    const Eigen::Index n = spectrum.size();
    const double theta = (u - grid.start()) / grid.length();
    const std::complex<double> w = std::polar(1.0, 2.0 * kPi * theta);
    std::complex<double> acc = spectrum[n - 1];
    for (Eigen::Index m = n - 2; m >= 0; --m) {
        acc = acc * w + spectrum[m];
    }
    return acc * std::polar(1.0, -kPi * static_cast<double>(n) * theta);
}

} // namespace ssr
