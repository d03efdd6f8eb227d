#include "ssr/representations.hpp"

#include <cmath>
#include <numbers>

#include "ssr/fourier.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Coefficients of p(a*u + c) for a polynomial p.
Eigen::VectorXcd compose_linear(const Eigen::VectorXcd& p, Complex a, Complex c) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(p.size());
    for (Eigen::Index k = p.size() - 1; k >= 0; --k) {
        // out <- out * (a u + c) + p[k]
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(p.size());
        for (Eigen::Index j = 0; j + 1 < p.size(); ++j) {
            next[j + 1] += a * out[j];
        }
        next += c * out;
        next[0] += p[k];
        out = next;
    }
    return out;
}

} // namespace

PolyGaussChirp schrodinger_apply(const GroupElement& g, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx) {
    const double h = ctx.h();
    const double s = g.s(), x = g.x(), y = g.y(), b = g.b(), r = g.r();
    const Complex a = f.alpha(), be = f.beta(), ga = f.gamma();
    const double r2 = r * r;

    const Complex alpha = a * r2 + kI * h * b;
    const Complex beta = be * r - a * r2 * y - kI * h * (x + b * y);
    const Complex gamma =
        ga + a * r2 * y * y - 2.0 * be * r * y + kI * h * (b * y * y + 2.0 * x * y - 2.0 * s);

    Eigen::VectorXcd poly = std::sqrt(r) * compose_linear(f.poly(), Complex(r, 0.0), Complex(-r * y, 0.0));
    return PolyGaussChirp(std::move(poly), alpha, beta, gamma);
}

SampledSignal schrodinger_apply_sampled(const GroupElement& g, const SampledSignal& f,
                                        const RepresentationContext& ctx) {
    const double h = ctx.h();
    const double s = g.s(), x = g.x(), y = g.y(), b = g.b(), r = g.r();
    const UniformGrid1D& grid = f.grid;

    // Support check: the result lives where r(u - y) stays inside the input
    // support, i.e. on y + supp(f)/r.
    const double peak = f.values.cwiseAbs().maxCoeff();
    if (peak > 0.0) {
        double t = 0.0;
        for (Eigen::Index j = 0; j < grid.count(); ++j) {
            if (std::abs(f.values[j]) > 1e-10 * peak) t = std::max(t, std::abs(grid.point(j)));
        }
        const double lo = y - t / r;
        const double hi = y + t / r;
        if (lo < grid.start() || hi > grid.start() + grid.length()) {
            throw WindowOverflowError(
                "schrodinger_apply_sampled: transformed support leaves the grid window");
        }
    }

    const Eigen::VectorXcd spectrum = interpolation_spectrum(f.values);
    Eigen::VectorXcd out(grid.count());
    const double sq = std::sqrt(r);
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        const double v = grid.point(j) - y;
        const double arg = r * v;
        Complex fv{0.0, 0.0};
        if (arg >= grid.start() && arg < grid.start() + grid.length()) {
            fv = interpolant_eval(grid, spectrum, arg);
        }
        const double phase = 2.0 * kPi * h * (s + x * v - 0.5 * b * v * v);
        out[j] = sq * std::polar(1.0, phase) * fv;
    }
    return SampledSignal(grid, std::move(out));
}

Signal schrodinger_apply(const GroupElement& g, const Signal& f, const RepresentationContext& ctx) {
    if (f.exact()) return Signal(schrodinger_apply(g, f.chirp(), ctx));
    return Signal(schrodinger_apply_sampled(g, f.samples(), ctx));
}

Complex quasi_regular_point(const GroupElement& g, const FieldEvaluator& f, const Point4& p,
                            const RepresentationContext& ctx) {
    const GroupElement moved = multiply(inverse(g), section(p.x, p.y, p.b, p.r));
    const CenterDecomposition dec = center_decomposition(moved);
    const double phase = -2.0 * kPi * ctx.h() * dec.center;
    return std::polar(1.0, phase) * f(dec.x, dec.y, dec.b, dec.r);
}

PolyGaussChirp derived_rep_apply(const AlgebraCombo& a, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx) {
    const double h = ctx.h();
    const Complex al = f.alpha(), be = f.beta();
    const Eigen::VectorXcd& p = f.poly();
    const Eigen::Index n = p.size();

    // Everything below preserves the envelope; only the polynomial moves.
    // Worst case degree growth is two (the B and R terms).
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(n + 2);

    const Complex cs = a[Basis::S], cx = a[Basis::X], cy = a[Basis::Y], cb = a[Basis::B],
                  cr = a[Basis::R];

    if (cs != 0.0) {
        q.head(n) += cs * (2.0 * kPi * h * kI) * p;
    }
    if (cx != 0.0) {
        const Complex c = cx * (2.0 * kPi * h * kI);
        for (Eigen::Index k = 0; k < n; ++k) q[k + 1] += c * p[k];
    }
    if (cb != 0.0) {
        const Complex c = cb * (-kPi * h * kI);
        for (Eigen::Index k = 0; k < n; ++k) q[k + 2] += c * p[k];
    }
    if (cy != 0.0) {
        // -f' = (-p' + 2 pi (alpha u + beta) p) e
        for (Eigen::Index k = 1; k < n; ++k) q[k - 1] -= cy * static_cast<double>(k) * p[k];
        for (Eigen::Index k = 0; k < n; ++k) {
            q[k] += cy * 2.0 * kPi * be * p[k];
            q[k + 1] += cy * 2.0 * kPi * al * p[k];
        }
    }
    if (cr != 0.0) {
        // f/2 + u f' = (p/2 + u p' - 2 pi (alpha u + beta) u p) e
        q.head(n) += cr * 0.5 * p;
        for (Eigen::Index k = 1; k < n; ++k) q[k] += cr * static_cast<double>(k) * p[k];
        for (Eigen::Index k = 0; k < n; ++k) {
            q[k + 1] -= cr * 2.0 * kPi * be * p[k];
            q[k + 2] -= cr * 2.0 * kPi * al * p[k];
        }
    }
    return PolyGaussChirp(std::move(q), al, be, f.gamma());
}

PolyGaussChirp derived_rep_apply(const AlgebraVector& a, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx) {
    return derived_rep_apply(a.cast<Complex>(), f, ctx);
}

SampledSignal derived_rep_numeric(Basis v, const PolyGaussChirp& f, double t_step,
                                  const RepresentationContext& ctx, const UniformGrid1D& grid) {
    if (!(t_step > 0.0)) {
        throw InvalidSpecError("derived_rep_numeric: t_step must be positive");
    }
    const PolyGaussChirp plus = schrodinger_apply(exp_one_param(v, t_step), f, ctx);
    const PolyGaussChirp minus = schrodinger_apply(exp_one_param(v, -t_step), f, ctx);
    const Eigen::ArrayXd u = grid.points();
    Eigen::VectorXcd out(grid.count());
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        out[j] = (plus.evaluate(u[j]) - minus.evaluate(u[j])) / (2.0 * t_step);
    }
    return SampledSignal(grid, std::move(out));
}

Complex lie_derivative_apply(Basis v, const FieldEvaluator& f, const Point4& p,
                             const LieSteps& steps, const RepresentationContext& ctx) {
    const double h = ctx.h();
    auto dx = [&](double step) {
        return (f(p.x + step, p.y, p.b, p.r) - f(p.x - step, p.y, p.b, p.r)) / (2.0 * step);
    };
    auto dy = [&](double step) {
        return (f(p.x, p.y + step, p.b, p.r) - f(p.x, p.y - step, p.b, p.r)) / (2.0 * step);
    };
    auto db = [&](double step) {
        return (f(p.x, p.y, p.b + step, p.r) - f(p.x, p.y, p.b - step, p.r)) / (2.0 * step);
    };
    auto dr = [&](double step) {
        return (f(p.x, p.y, p.b, p.r + step) - f(p.x, p.y, p.b, p.r - step)) / (2.0 * step);
    };

    switch (v) {
    case Basis::S:
        return -2.0 * kPi * h * kI * f(p.x, p.y, p.b, p.r);
    case Basis::X:
        return p.r * dx(steps.dx);
    case Basis::B:
        return p.r * p.r * db(steps.db);
    case Basis::R:
        return p.r * dr(steps.dr_rel * p.r);
    case Basis::Y:
        return (1.0 / p.r) * (-2.0 * kPi * h * kI * p.x * f(p.x, p.y, p.b, p.r) -
                              p.b * dx(steps.dx) + dy(steps.dy));
    }
    throw InvalidSpecError("lie_derivative_apply: unknown basis direction");
}

} // namespace ssr
