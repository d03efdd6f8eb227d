#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "ssr/errors.hpp"
#include "ssr/grid.hpp"

namespace ssr {

using Complex = std::complex<double>;

class PlanckConstant {
public:
    explicit PlanckConstant(double value);
    double value() const { return value_; }

private:
    double value_;
};

// Samples of a signal on a uniform grid, rectangle-rule semantics.
struct SampledSignal {
    SampledSignal(UniformGrid1D grid_, Eigen::VectorXcd values_);

    UniformGrid1D grid;
    Eigen::VectorXcd values;

    double norm() const; // sqrt(step * sum |v|^2)
};

// p(u) * exp(-pi*(alpha*u^2 + 2*beta*u + gamma)) with Re(alpha) > 0 and a
// polynomial p of degree <= 64.  Closed under the group action and under the
// derived action, which keeps inner products exact.
class PolyGaussChirp {
public:
    static constexpr int kMaxDegree = 64;

    PolyGaussChirp(Eigen::VectorXcd poly, Complex alpha, Complex beta, Complex gamma);

    const Eigen::VectorXcd& poly() const { return poly_; }
    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    Complex gamma() const { return gamma_; }
    int degree() const { return static_cast<int>(poly_.size()) - 1; }

    Complex evaluate(double u) const;
    Eigen::VectorXcd evaluate_many(const Eigen::ArrayXd& u) const;

    PolyGaussChirp derivative() const;

    // Same envelope, polynomial multiplied by (c0 + c1*u).
    PolyGaussChirp times_linear(Complex c0, Complex c1) const;
    PolyGaussChirp scaled(Complex c) const;

private:
    Eigen::VectorXcd poly_; // poly_[k] multiplies u^k
    Complex alpha_, beta_, gamma_;
};

// Exact sum of two chirps sharing one envelope; grids of envelopes must agree
// exactly, otherwise the result leaves the family.
PolyGaussChirp add(const PolyGaussChirp& f, const PolyGaussChirp& g);

// A signal is either exact (PolyGaussChirp) or sampled.  Sampled signals are
// evaluated between nodes by trigonometric interpolation on their own grid;
// the interpolant is built once at construction so instances are immutable.
class Signal {
public:
    Signal(PolyGaussChirp chirp);   // NOLINT(google-explicit-constructor)
    Signal(SampledSignal samples);  // NOLINT(google-explicit-constructor)

    bool exact() const { return std::holds_alternative<PolyGaussChirp>(v_); }
    const PolyGaussChirp& chirp() const;
    const SampledSignal& samples() const;

    // For sampled signals, points outside the grid window evaluate to zero.
    Complex evaluate(double u) const;
    Eigen::VectorXcd evaluate_many(const Eigen::ArrayXd& u) const;

    SampledSignal sample_on(const UniformGrid1D& grid) const;
    double norm() const;

private:
    std::variant<PolyGaussChirp, SampledSignal> v_;
    Eigen::VectorXcd spectrum_; // centered Fourier coefficients, sampled case only
};

// Normalized Gaussian (2 hbar)^(1/4) * exp(-pi*hbar*u^2): unit norm, vacuum
// of the derived lowering operator.
PolyGaussChirp gaussian_chirp(const PlanckConstant& hbar);

// Orthonormal Hermite family; hermite(0, h) == gaussian_chirp(h).
PolyGaussChirp hermite(int n, const PlanckConstant& hbar);

// Inner products, conjugate-linear in the second slot.  Exact pairs use the
// Gaussian moment recurrence; otherwise the rectangle rule on the common
// grid.  Sampled signals on different grids are a GridMismatchError.
Complex inner_product(const PolyGaussChirp& f, const PolyGaussChirp& g);
Complex inner_product(const SampledSignal& f, const SampledSignal& g);
Complex inner_product(const Signal& f, const Signal& g);

double norm(const PolyGaussChirp& f);

// Smallest symmetric interval [-T, T] outside which |f| stays below
// rel_tol * max|f|.
double essential_halfwidth(const Signal& f, double rel_tol = 1e-14);

} // namespace ssr
