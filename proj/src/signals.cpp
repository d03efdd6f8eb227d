#include "ssr/signals.hpp"

#include <cmath>
#include <numbers>

#include "ssr/fourier.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;

} // namespace

PlanckConstant::PlanckConstant(double value) : value_(value) {
    if (!(std::isfinite(value) && value > 0.0)) {
        throw InvalidSpecError("PlanckConstant: value must be positive and finite");
    }
}

SampledSignal::SampledSignal(UniformGrid1D grid_, Eigen::VectorXcd values_)
    : grid(grid_), values(std::move(values_)) {
    if (values.size() != grid.count()) {
        throw InvalidSpecError("SampledSignal: value count must match the grid");
    }
}

double SampledSignal::norm() const { return std::sqrt(grid.step()) * values.norm(); }

PolyGaussChirp::PolyGaussChirp(Eigen::VectorXcd poly, Complex alpha, Complex beta, Complex gamma)
    : poly_(std::move(poly)), alpha_(alpha), beta_(beta), gamma_(gamma) {
    if (poly_.size() == 0) {
        throw InvalidSpecError("PolyGaussChirp: polynomial must have at least one coefficient");
    }
    Eigen::Index last = poly_.size() - 1;
    while (last > 0 && poly_[last] == Complex(0.0, 0.0)) --last;
    poly_.conservativeResize(last + 1);
    if (degree() > kMaxDegree) {
        throw InvalidSpecError("PolyGaussChirp: polynomial degree exceeds the cap of 64");
    }
    if (!(alpha_.real() > 0.0)) {
        throw InvalidSpecError("PolyGaussChirp: Re(alpha) must be positive");
    }
    if (!poly_.allFinite()) {
        throw InvalidSpecError("PolyGaussChirp: coefficients must be finite");
    }
}

Complex PolyGaussChirp::evaluate(double u) const {
    Complex p = poly_[poly_.size() - 1];
    for (Eigen::Index k = poly_.size() - 2; k >= 0; --k) {
        p = p * u + poly_[k];
    }
    const Complex expo = -kPi * (alpha_ * u * u + 2.0 * beta_ * u + gamma_);
    return p * std::exp(expo);
}

Eigen::VectorXcd PolyGaussChirp::evaluate_many(const Eigen::ArrayXd& u) const {
    Eigen::VectorXcd out(u.size());
    for (Eigen::Index j = 0; j < u.size(); ++j) out[j] = evaluate(u[j]);
    return out;
}

PolyGaussChirp PolyGaussChirp::derivative() const {
    // (p e^E)' = (p' + E' p) e^E with E' = -2*pi*(alpha*u + beta).
    const Eigen::Index n = poly_.size();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(n + 1);
    for (Eigen::Index k = 1; k < n; ++k) {
        q[k - 1] += static_cast<double>(k) * poly_[k];
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        q[k] += -2.0 * kPi * beta_ * poly_[k];
        q[k + 1] += -2.0 * kPi * alpha_ * poly_[k];
    }
    return PolyGaussChirp(q, alpha_, beta_, gamma_);
}

PolyGaussChirp PolyGaussChirp::times_linear(Complex c0, Complex c1) const {
    const Eigen::Index n = poly_.size();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(n + 1);
    for (Eigen::Index k = 0; k < n; ++k) {
        q[k] += c0 * poly_[k];
        q[k + 1] += c1 * poly_[k];
    }
    return PolyGaussChirp(q, alpha_, beta_, gamma_);
}

PolyGaussChirp PolyGaussChirp::scaled(Complex c) const {
    return PolyGaussChirp(c * poly_, alpha_, beta_, gamma_);
}

PolyGaussChirp add(const PolyGaussChirp& f, const PolyGaussChirp& g) {
    if (f.alpha() != g.alpha() || f.beta() != g.beta() || f.gamma() != g.gamma()) {
        throw InvalidSpecError("add: chirps must share the exact same envelope");
    }
    const Eigen::Index n = std::max(f.poly().size(), g.poly().size());
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(n);
    q.head(f.poly().size()) += f.poly();
    q.head(g.poly().size()) += g.poly();
    return PolyGaussChirp(q, f.alpha(), f.beta(), f.gamma());
}

Signal::Signal(PolyGaussChirp chirp) : v_(std::move(chirp)) {}

Signal::Signal(SampledSignal samples) : v_(std::move(samples)) {
    spectrum_ = interpolation_spectrum(std::get<SampledSignal>(v_).values);
}

const PolyGaussChirp& Signal::chirp() const {
    if (!exact()) throw InvalidSpecError("Signal: not an exact signal");
    return std::get<PolyGaussChirp>(v_);
}

const SampledSignal& Signal::samples() const {
    if (exact()) throw InvalidSpecError("Signal: not a sampled signal");
    return std::get<SampledSignal>(v_);
}

Complex Signal::evaluate(double u) const {
    if (exact()) return chirp().evaluate(u);
    const SampledSignal& s = samples();
    if (u < s.grid.start() || u >= s.grid.start() + s.grid.length()) return {0.0, 0.0};
    return interpolant_eval(s.grid, spectrum_, u);
}

Eigen::VectorXcd Signal::evaluate_many(const Eigen::ArrayXd& u) const {
    Eigen::VectorXcd out(u.size());
    for (Eigen::Index j = 0; j < u.size(); ++j) out[j] = evaluate(u[j]);
    return out;
}

SampledSignal Signal::sample_on(const UniformGrid1D& grid) const {
    if (!exact() && samples().grid.same_as(grid)) return samples();
    return SampledSignal(grid, evaluate_many(grid.points()));
}

double Signal::norm() const {
    if (exact()) return ssr::norm(chirp());
    return samples().norm();
}

PolyGaussChirp gaussian_chirp(const PlanckConstant& hbar) {
    const double h = hbar.value();
    Eigen::VectorXcd p(1);
    p[0] = std::pow(2.0 * h, 0.25);
    return PolyGaussChirp(p, Complex(h, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0));
}

PolyGaussChirp hermite(int n, const PlanckConstant& hbar) {
    if (n < 0 || n > PolyGaussChirp::kMaxDegree) {
        throw InvalidSpecError("hermite: order must lie in [0, 64]");
    }
    const double h = hbar.value();
    const double c = std::sqrt(2.0 * kPi * h);
    // Normalized recurrence h_{k+1} = (sqrt(2) c u h_k - sqrt(k) h_{k-1}) / sqrt(k+1);
    // coefficients stay O(1) for every order.
    Eigen::VectorXcd prev = Eigen::VectorXcd::Zero(n + 1);
    Eigen::VectorXcd cur = Eigen::VectorXcd::Zero(n + 1);
    cur[0] = std::pow(2.0 * h, 0.25);
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(n + 1);
        for (int j = 0; j <= k; ++j) {
            next[j + 1] += std::sqrt(2.0) * c * cur[j];
        }
        if (k > 0) {
            next.head(k) -= std::sqrt(static_cast<double>(k)) * prev.head(k);
        }
        next /= std::sqrt(static_cast<double>(k + 1));
        prev = cur;
        cur = next;
    }
    return PolyGaussChirp(cur, Complex(h, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0));
}

Complex inner_product(const PolyGaussChirp& f, const PolyGaussChirp& g) {
    const Complex a = f.alpha() + std::conj(g.alpha());
    const Complex b = f.beta() + std::conj(g.beta());
    const Complex c = f.gamma() + std::conj(g.gamma());
    // a has positive real part by construction of both factors.
    const Eigen::Index nf = f.poly().size();
    const Eigen::Index ng = g.poly().size();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(nf + ng - 1);
    for (Eigen::Index i = 0; i < nf; ++i) {
        for (Eigen::Index j = 0; j < ng; ++j) {
            q[i + j] += f.poly()[i] * std::conj(g.poly()[j]);
        }
    }
    // Moments I_n = int u^n exp(-pi (a u^2 + 2 b u + c)) du.
    const Eigen::Index top = q.size() - 1;
    std::vector<Complex> moments(static_cast<size_t>(top) + 2);
    moments[0] = std::exp(kPi * (b * b / a - c)) / std::sqrt(a);
    if (top >= 1) moments[1] = -(b / a) * moments[0];
    for (Eigen::Index n = 1; n < top; ++n) {
        moments[n + 1] =
            (static_cast<double>(n) * moments[n - 1] - 2.0 * kPi * b * moments[n]) / (2.0 * kPi * a);
    }
    Complex out{0.0, 0.0};
    for (Eigen::Index k = 0; k <= top; ++k) out += q[k] * moments[k];
    return out;
}

Complex inner_product(const SampledSignal& f, const SampledSignal& g) {
    if (!f.grid.same_as(g.grid)) {
        throw GridMismatchError("inner_product: sampled signals live on different grids");
    }
    return f.grid.step() * g.values.dot(f.values);
}

Complex inner_product(const Signal& f, const Signal& g) {
    if (f.exact() && g.exact()) return inner_product(f.chirp(), g.chirp());
    if (!f.exact() && !g.exact()) return inner_product(f.samples(), g.samples());
    if (f.exact()) {
        const UniformGrid1D& grid = g.samples().grid;
        return inner_product(f.sample_on(grid), g.samples());
    }
    const UniformGrid1D& grid = f.samples().grid;
    return inner_product(f.samples(), g.sample_on(grid));
}

double norm(const PolyGaussChirp& f) {
    return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

double essential_halfwidth(const Signal& f, double rel_tol) {
    if (!f.exact()) {
        const SampledSignal& s = f.samples();
        const double peak = s.values.cwiseAbs().maxCoeff();
        double t = 0.0;
        for (Eigen::Index j = 0; j < s.grid.count(); ++j) {
            if (std::abs(s.values[j]) > rel_tol * peak) {
                t = std::max(t, std::abs(s.grid.point(j)));
            }
        }
        return t;
    }
    // Probe on successively wider symmetric windows until the tail is dead.
    for (double half = 4.0; half <= 4096.0; half *= 2.0) {
        const Eigen::ArrayXd u = Eigen::ArrayXd::LinSpaced(2048, -half, half);
        Eigen::ArrayXd mag(u.size());
        for (Eigen::Index j = 0; j < u.size(); ++j) mag[j] = std::abs(f.evaluate(u[j]));
        const double peak = mag.maxCoeff();
        double t = 0.0;
        for (Eigen::Index j = 0; j < u.size(); ++j) {
            if (mag[j] > rel_tol * peak) t = std::max(t, std::abs(u[j]));
        }
        if (t < 0.9 * half) return t;
    }
    throw WindowOverflowError("essential_halfwidth: signal does not decay within |u| <= 4096");
}

} // namespace ssr
