#include "ssr/metamorph.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "ssr/fiducial.hpp"
#include "ssr/fourier.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Quadrature window for per-point sums: the signal's own grid, or the
// default window widened in octaves until exact tails fit.
UniformGrid1D quadrature_grid_for(const Signal& f) {
    if (!f.exact()) return f.samples().grid;
    UniformGrid1D base = default_grid();
    const double t = essential_halfwidth(f, 1e-14);
    double half = -base.start();
    Eigen::Index count = base.count();
    while (t > half) {
        if (half >= 256.0) {
            throw WindowOverflowError("covariant transform: signal support exceeds the largest "
                                      "quadrature window (|u| <= 256)");
        }
        half *= 2.0;
        count *= 2;
    }
    return UniformGrid1D::centered(half, count);
}

// Grid the fast route runs on.  Widened when r < 0.25 so the slice keeps its
// (x, y) mass inside the window.
UniformGrid1D fast_base_grid(const Signal& f, const Signal& phi, double r) {
    if (!f.exact() && !phi.exact()) {
        if (std::abs(f.samples().grid.step() - phi.samples().grid.step()) >
            1e-9 * f.samples().grid.step()) {
            throw GridMismatchError("covariant_fast: signal and fiducial grids have unequal "
                                    "spacing; resample explicitly first");
        }
    }
    UniformGrid1D base = f.exact() ? quadrature_grid_for(f) : f.samples().grid;
    if (r < 0.25) {
        const double need = essential_halfwidth(f, 1e-12) + essential_halfwidth(phi, 1e-12) / r;
        const double half = std::max(std::abs(base.start()), std::abs(base.back()));
        int factor = 1;
        while (half * factor < need && factor < 16) factor *= 2;
        if (half * factor < need) {
            throw WindowOverflowError(
                "covariant_fast: window cannot cover the dilated fiducial overlap (r too small)");
        }
        if (factor > 1) {
            const Eigen::Index offset = (factor - 1) * base.count() / 2;
            base = UniformGrid1D(base.start() - static_cast<double>(offset) * base.step(),
                                 base.step(), base.count() * factor);
        }
    }
    if (base.count() % 2 != 0) {
        throw InvalidSpecError("covariant_fast: grid count must be even");
    }
    return base;
}

Eigen::MatrixXcd dx_field(const Eigen::MatrixXcd& v, const UniformGrid1D& x_grid, int order = 1) {
    Eigen::MatrixXcd out(v.rows(), v.cols());
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        out.col(c) = spectral_derivative(v.col(c), x_grid, order);
    }
    return out;
}

Eigen::MatrixXcd dy_field(const Eigen::MatrixXcd& v, const UniformGrid1D& y_grid, int order = 1) {
    Eigen::MatrixXcd out(v.rows(), v.cols());
    for (Eigen::Index rr = 0; rr < v.rows(); ++rr) {
        out.row(rr) = spectral_derivative(v.row(rr).transpose(), y_grid, order).transpose();
    }
    return out;
}

double matrix_rel_residual(const Eigen::MatrixXcd& num, const Eigen::MatrixXcd& den) {
    const double d = den.norm();
    if (d == 0.0) return 0.0;
    return num.norm() / d;
}

} // namespace

std::string describe_signal(const Signal& s) {
    if (!s.exact()) {
        return "samples(" + std::to_string(s.samples().grid.count()) + ")";
    }
    const PolyGaussChirp& c = s.chirp();
    if (c.degree() == 0 && c.beta() == Complex(0.0, 0.0) && c.gamma() == Complex(0.0, 0.0) &&
        c.alpha().imag() == 0.0) {
        return "gaussian";
    }
    return "poly_gauss_chirp(degree=" + std::to_string(c.degree()) + ")";
}

Complex covariant_point(const Signal& f, const Signal& phi, const Point4& p,
                        const RepresentationContext& ctx) {
    if (!(p.r > 0.0)) throw InvalidSpecError("covariant_point: r must be positive");
    const double h = ctx.h();
    const UniformGrid1D grid = quadrature_grid_for(f);
    const double du = grid.step();
    const double sq = std::sqrt(p.r);
    Complex acc{0.0, 0.0};
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        const double u = grid.point(j);
        const double v = u - p.y;
        const Complex fv = f.evaluate(u);
        if (fv == Complex(0.0, 0.0)) continue;
        const double phase = -2.0 * kPi * h * p.x * v + kPi * h * p.b * v * v;
        acc += fv * std::polar(1.0, phase) * std::conj(phi.evaluate(p.r * v));
    }
    return sq * du * acc;
}

TransformResult covariant_direct(const Signal& f, const Signal& phi, const UniformGrid1D& x_grid,
                                 const UniformGrid1D& y_grid, double b, double r,
                                 const RepresentationContext& ctx) {
    if (!(r > 0.0)) throw InvalidSpecError("covariant_direct: r must be positive");
    const double h = ctx.h();
    const UniformGrid1D q = quadrature_grid_for(f);
    const Eigen::Index nq = q.count();
    const double du = q.step();
    const double sq = std::sqrt(r);

    const Eigen::ArrayXd u = q.points();
    const Eigen::VectorXcd fv = f.evaluate_many(u);

    Eigen::MatrixXcd out(x_grid.count(), y_grid.count());
    Eigen::VectorXcd w(nq);
    for (Eigen::Index i = 0; i < y_grid.count(); ++i) {
        const double y = y_grid.point(i);
        for (Eigen::Index j = 0; j < nq; ++j) {
            const double v = u[j] - y;
            w[j] = fv[j] * std::polar(sq * du, kPi * h * b * v * v) *
                   std::conj(phi.evaluate(r * v));
        }
        for (Eigen::Index k = 0; k < x_grid.count(); ++k) {
            const double x = x_grid.point(k);
            const Complex rho = std::polar(1.0, -2.0 * kPi * h * x * du);
            Complex t = std::polar(1.0, -2.0 * kPi * h * x * (u[0] - y));
            Complex acc{0.0, 0.0};
            for (Eigen::Index j = 0; j < nq; ++j) {
                acc += w[j] * t;
                t *= rho;
            }
            out(k, i) = acc;
        }
    }
    return TransformResult{ComplexField2D(x_grid, y_grid, std::move(out), b, r, h),
                           describe_signal(phi)};
}

TransformResult covariant_fast(const Signal& f, const Signal& phi, double b, double r,
                               const RepresentationContext& ctx) {
    if (!(r > 0.0)) throw InvalidSpecError("covariant_fast: r must be positive");
    const double h = ctx.h();
    const UniformGrid1D base = fast_base_grid(f, phi, r);
    const Eigen::Index n = base.count();
    const double du = base.step();

    // Dilation of the fiducial and the chirp factor, tabulated over the
    // offsets u - y the shear produces.
    const double sq = std::sqrt(r);
    Eigen::VectorXcd table(2 * n - 1);
    for (Eigen::Index d = -(n - 1); d <= n - 1; ++d) {
        const double v = static_cast<double>(d) * du;
        table[d + n - 1] =
            std::polar(sq, kPi * h * b * v * v) * std::conj(phi.evaluate(r * v));
    }

    // Signal embedded centrally in the doubled window.
    const UniformGrid1D padded(base.start() - du * static_cast<double>(n / 2), du, 2 * n);
    Eigen::VectorXcd fpad = Eigen::VectorXcd::Zero(2 * n);
    fpad.segment(n / 2, n) = f.sample_on(base).values;

    // Coordinate shear: G(m, i) = f(v_m) * table(v_m - y_i).
    Eigen::MatrixXcd sheared = Eigen::MatrixXcd::Zero(2 * n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index m = n / 2; m < n + n / 2; ++m) {
            const Eigen::Index d = m - i - n / 2;
            sheared(m, i) = fpad[m] * table[d + n - 1];
        }
    }

    PartialFourierResult pf = partial_fourier(sheared, padded, h, -1, 1);

    // Final modulation exp(2 pi i hbar x y) and the central crop in x.
    UniformGrid1D x_grid(pf.x_grid.point(n / 2), pf.x_grid.step(), n);
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double y = base.point(i);
        for (Eigen::Index k = 0; k < n; ++k) {
            const double x = x_grid.point(k);
            out(k, i) = pf.values(n / 2 + k, i) * std::polar(1.0, 2.0 * kPi * h * x * y);
        }
    }
    return TransformResult{ComplexField2D(x_grid, base, std::move(out), b, r, h),
                           describe_signal(phi)};
}

TransformResult metamorphism(const Signal& f, double b, double r,
                             const RepresentationContext& ctx) {
    TransformResult res = covariant_fast(f, Signal(gaussian(ctx)), b, r, ctx);
    res.fiducial = "gaussian";
    return res;
}

TransformResult metamorphism(const Signal& f, const UniformGrid1D& x_grid,
                             const UniformGrid1D& y_grid, double b, double r,
                             const RepresentationContext& ctx) {
    const Signal phi(gaussian(ctx));
    const UniformGrid1D base = fast_base_grid(f, phi, r);
    const double dual_step = 1.0 / (ctx.h() * 2.0 * static_cast<double>(base.count()) * base.step());
    const UniformGrid1D natural_x(-dual_step * static_cast<double>(base.count() / 2), dual_step,
                                  base.count());
    if (y_grid.same_as(base, 1e-9) && x_grid.same_as(natural_x, 1e-9)) {
        TransformResult res = covariant_fast(f, phi, b, r, ctx);
        res.fiducial = "gaussian";
        return res;
    }
    TransformResult res = covariant_direct(f, phi, x_grid, y_grid, b, r, ctx);
    res.fiducial = "gaussian";
    return res;
}

SampledSignal contravariant(std::span<const ComplexField2D> fields, const Signal& phi,
                            const MeasureSpec& measure, const RepresentationContext& ctx) {
    const double h = ctx.h();
    const ComplexField2D& first =
        find_slice(fields, measure.atoms().front().b, measure.atoms().front().r);
    const UniformGrid1D out_grid = first.y_grid();
    const Eigen::Index ny = out_grid.count();
    const double dy = out_grid.step();

    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(ny);
    for (const MeasureSpec::Atom& atom : measure.atoms()) {
        const ComplexField2D& field = find_slice(fields, atom.b, atom.r);
        if (!field.x_grid().same_as(first.x_grid()) || !field.y_grid().same_as(first.y_grid())) {
            throw GridMismatchError("contravariant: slices live on different grids");
        }
        if (field.hbar() != h) {
            throw InvalidSpecError("contravariant: field hbar does not match the context");
        }

        // Inverse-kernel transform along x; the dual grid must reproduce the
        // y spacing so the shear below is pure index arithmetic.
        PartialFourierResult pf = partial_fourier(field.values(), field.x_grid(), h, 1, 2);
        if (std::abs(pf.x_grid.step() - dy) > 1e-9 * dy) {
            throw GridMismatchError("contravariant: field x grid is not dual to its y grid");
        }
        const Eigen::Index m = pf.x_grid.count();

        const double r = atom.r;
        const double b = atom.b;
        const double sq = std::sqrt(r);
        Eigen::VectorXcd table(2 * ny - 1);
        for (Eigen::Index d = -(ny - 1); d <= ny - 1; ++d) {
            const double v = static_cast<double>(d) * dy;
            table[d + ny - 1] = std::polar(sq, -kPi * h * b * v * v) * phi.evaluate(r * v);
        }

        const double wfac = atom.weight * slice_weight_factor(measure.weight(), r, h) * dy;
        for (Eigen::Index j = 0; j < ny; ++j) {
            Complex sum{0.0, 0.0};
            for (Eigen::Index i = 0; i < ny; ++i) {
                const Eigen::Index idx = j - i + m / 2;
                if (idx < 0 || idx >= m) continue;
                sum += pf.values(idx, i) * table[j - i + ny - 1];
            }
            acc[j] += wfac * sum;
        }
    }
    return SampledSignal(out_grid, std::move(acc));
}

SampledSignal contravariant(const ComplexField2D& field, const Signal& phi,
                            const RepresentationContext& ctx) {
    const std::vector<ComplexField2D> fields{field};
    return contravariant(fields, phi, MeasureSpec::dirac(field.b(), field.r()), ctx);
}

double intertwining_residual(const GroupElement& g, const Signal& f, const Signal& phi,
                             std::span<const Point4> points, const RepresentationContext& ctx) {
    const Signal moved = schrodinger_apply(g, f, ctx);
    const FieldEvaluator transform_of_f = [&](double x, double y, double b, double r) {
        return covariant_point(f, phi, Point4{x, y, b, r}, ctx);
    };
    double worst = 0.0;
    for (const Point4& p : points) {
        const Complex lhs = covariant_point(moved, phi, p, ctx);
        const Complex rhs = quasi_regular_point(g, transform_of_f, p, ctx);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double orthogonality_defect(const Signal& f, const Signal& g, const Signal& phi, const Signal& psi,
                            const MeasureSpec& measure, const RepresentationContext& ctx) {
    std::vector<ComplexField2D> lhs_f, lhs_g;
    lhs_f.reserve(measure.atoms().size());
    lhs_g.reserve(measure.atoms().size());
    for (const MeasureSpec::Atom& atom : measure.atoms()) {
        lhs_f.push_back(covariant_fast(f, phi, atom.b, atom.r, ctx).field);
        lhs_g.push_back(covariant_fast(g, psi, atom.b, atom.r, ctx).field);
    }
    const Complex lhs = slice_inner_product(lhs_f, lhs_g, measure);
    const Complex rhs = inner_product(f, g) * inner_product(psi, phi);
    return std::abs(lhs - rhs);
}

CauchyRiemannResiduals cauchy_riemann_residuals(const SliceStack& stack) {
    const ComplexField2D& c = stack.center();
    const Eigen::MatrixXcd& v = c.values();
    const double h = c.hbar();
    const double r = c.r();
    const double b = c.b();

    const Eigen::MatrixXcd vx = dx_field(v, c.x_grid());
    const Eigen::MatrixXcd vy = dy_field(v, c.y_grid());
    Eigen::MatrixXcd c1 = ((Complex(r * r, 0.0) - kI * b) * vx + kI * vy) / r;
    const Eigen::ArrayXd xs = c.x_grid().points();
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
        c1.row(k) += (2.0 * kPi * h * xs[k] / r) * v.row(k);
    }

    const Eigen::MatrixXcd vb = (stack.b_plus().values() - stack.b_minus().values()) /
                                (2.0 * stack.h_b());
    const Eigen::MatrixXcd vr = (stack.r_plus().values() - stack.r_minus().values()) /
                                (2.0 * stack.h_r());
    const Eigen::MatrixXcd c2 = 2.0 * r * r * vb + kI * r * vr - 0.5 * kI * v;

    return CauchyRiemannResiduals{matrix_rel_residual(c1, v), matrix_rel_residual(c2, v)};
}

StructuralResiduals structural_residuals(const SliceStack& stack) {
    const ComplexField2D& c = stack.center();
    const Eigen::MatrixXcd& v = c.values();
    const double h = c.hbar();
    const double r = c.r();
    const double b = c.b();

    const Eigen::MatrixXcd vb = (stack.b_plus().values() - stack.b_minus().values()) /
                                (2.0 * stack.h_b());
    const Eigen::MatrixXcd vr = (stack.r_plus().values() - stack.r_minus().values()) /
                                (2.0 * stack.h_r());
    const Eigen::MatrixXcd vx = dx_field(v, c.x_grid());
    const Eigen::MatrixXcd vxx = dx_field(v, c.x_grid(), 2);
    const Eigen::MatrixXcd vxy = dy_field(vx, c.y_grid());

    const Eigen::MatrixXcd s1 = (r * r) * (4.0 * kPi * h * kI * vb - vxx);

    Eigen::MatrixXcd s2 = -4.0 * kPi * h * kI * r * vr - 2.0 * b * vxx + 2.0 * vxy -
                          2.0 * kPi * h * kI * v;
    const Eigen::ArrayXd xs = c.x_grid().points();
    for (Eigen::Index k = 0; k < v.rows(); ++k) {
        s2.row(k) += (-4.0 * kPi * h * kI * xs[k]) * vx.row(k);
    }

    return StructuralResiduals{matrix_rel_residual(s1, v), matrix_rel_residual(s2, v)};
}

SliceStack make_slice_stack(const SliceProvider& provider, double b0, double r0, double h_b,
                            double h_r) {
    if (!(h_b > 0.0) || !(h_r > 0.0)) {
        throw InvalidSpecError("make_slice_stack: steps must be positive");
    }
    if (!(r0 - h_r > 0.0)) {
        throw InvalidSpecError("make_slice_stack: r0 - h_r must stay positive");
    }
    return SliceStack(provider(b0, r0), provider(b0 + h_b, r0), provider(b0 - h_b, r0),
                      provider(b0, r0 + h_r), provider(b0, r0 - h_r));
}

SliceStack metamorphism_stack(const Signal& f, double b0, double r0, double h_b, double h_r,
                              const RepresentationContext& ctx) {
    return make_slice_stack(
        [&](double b, double r) { return metamorphism(f, b, r, ctx).field; }, b0, r0, h_b, h_r);
}

Complex chart_w(double b, double r) {
    if (!(r > 0.0)) throw InvalidSpecError("chart_w: r must be positive");
    return Complex(b, r * r);
}

Complex chart_z(double x, double y, double b, double r) { return x + chart_w(b, r) * y; }

namespace {

ComplexChart chart_from(const ComplexField2D& center, const ComplexField2D* bp,
                        const ComplexField2D* bm, double h_b) {
    const Complex w = chart_w(center.b(), center.r());
    const double h = center.hbar();
    const double r = center.r();

    const double xmax = std::max(std::abs(center.x_grid().start()),
                                 std::abs(center.x_grid().back()));
    if (kPi * h * xmax * xmax * r * r / std::norm(w) > 700.0) {
        throw WindowOverflowError("to_complex_chart: chart factor overflows on this window");
    }

    ComplexChart chart{center.x_grid(), center.y_grid(), center.b(),       center.r(),
                       h_b,             h,               Eigen::MatrixXcd /*z*/ {},
                       Eigen::MatrixXcd{}, center.values(), std::nullopt,  std::nullopt};

    const Eigen::Index nx = center.x_grid().count();
    const Eigen::Index ny = center.y_grid().count();
    chart.z_values.resize(nx, ny);
    chart.f2_center.resize(nx, ny);
    const double sq = std::sqrt(r);
    for (Eigen::Index i = 0; i < ny; ++i) {
        const double y = center.y_grid().point(i);
        for (Eigen::Index k = 0; k < nx; ++k) {
            const double x = center.x_grid().point(k);
            chart.z_values(k, i) = x + w * y;
            chart.f2_center(k, i) =
                center.values()(k, i) * std::exp(kPi * h * kI * x * x / w) / sq;
        }
    }
    if (bp != nullptr && bm != nullptr) {
        chart.f_b_plus = bp->values();
        chart.f_b_minus = bm->values();
    }
    return chart;
}

} // namespace

ComplexChart to_complex_chart(const SliceStack& stack) {
    return chart_from(stack.center(), &stack.b_plus(), &stack.b_minus(), stack.h_b());
}

ComplexChart to_complex_chart(const ComplexField2D& field) {
    return chart_from(field, nullptr, nullptr, 0.0);
}

double parabolic_residual(const ComplexChart& chart) {
    if (!chart.f_b_plus || !chart.f_b_minus) {
        throw InvalidSpecError("parabolic_residual: chart lacks b-neighbour slices");
    }
    const double h = chart.hbar;
    const Complex w = chart.w();
    const Eigen::MatrixXcd& v = chart.f_center;
    const UniformGrid1D& xg = chart.x_grid;
    const UniformGrid1D& yg = chart.y_grid;

    const Eigen::MatrixXcd vx = dx_field(v, xg);
    const Eigen::MatrixXcd vxx = dx_field(v, xg, 2);
    const Eigen::MatrixXcd vb = (*chart.f_b_plus - *chart.f_b_minus) / (2.0 * chart.h_b);

    // All terms carry the common chart factor e^{pi i hbar x^2/w} / sqrt(r),
    // dropped here: equivalently the residual is taken in the weighted norm
    // the chart inherits from the slice.
    const Eigen::ArrayXd xs = xg.points();
    Eigen::MatrixXcd p(v.rows(), v.cols());
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const double y = yg.point(i);
        for (Eigen::Index k = 0; k < v.rows(); ++k) {
            const double x = xs[k];
            const Complex ex = 2.0 * kPi * h * kI * x / w;
            const Complex exx = 2.0 * kPi * h * kI / w;
            const Complex eb = -kPi * h * kI * x * x / (w * w);
            const Complex z = x + w * y;

            const Complex f2x = vx(k, i) + ex * v(k, i);
            const Complex f2xx = vxx(k, i) + 2.0 * ex * vx(k, i) + (ex * ex + exx) * v(k, i);
            const Complex f2b = vb(k, i) + eb * v(k, i);
            const Complex f2w = f2b - y * f2x;

            p(k, i) = 4.0 * kPi * h * kI * w * f2w - w * f2xx + 4.0 * kPi * h * kI * z * f2x +
                      2.0 * kPi * h * kI * v(k, i);
        }
    }
    return matrix_rel_residual(p, v);
}

CharacterizationResult characterize(const SliceProvider& provider, const Signal& phi,
                                    const CharacterizeTolerances& tol,
                                    const RepresentationContext& ctx, double b0, double r0,
                                    double h_b, double h_r) {
    CharacterizationResult res;
    const SliceStack stack = make_slice_stack(provider, b0, r0, h_b, h_r);

    if (!stack.center().values().allFinite() || !stack.b_plus().values().allFinite() ||
        !stack.b_minus().values().allFinite() || !stack.r_plus().values().allFinite() ||
        !stack.r_minus().values().allFinite()) {
        res.reason = "slice values are not finite";
        return res;
    }

    const CauchyRiemannResiduals cr = cauchy_riemann_residuals(stack);
    res.c1 = cr.c1;
    res.c2 = cr.c2;
    const StructuralResiduals st = structural_residuals(stack);
    res.s1 = st.s1;

    char buf[160];
    if (cr.c1 > tol.c1) {
        std::snprintf(buf, sizeof(buf), "C1 residual %.3e exceeds %.1e", cr.c1, tol.c1);
        res.reason = buf;
        return res;
    }
    if (cr.c2 > tol.c2) {
        std::snprintf(buf, sizeof(buf), "C2 residual %.3e exceeds %.1e", cr.c2, tol.c2);
        res.reason = buf;
        return res;
    }
    if (st.s1 > tol.s1) {
        std::snprintf(buf, sizeof(buf), "S1 residual %.3e exceeds %.1e", st.s1, tol.s1);
        res.reason = buf;
        return res;
    }

    // Reconstruct from the reference slice and compare one re-transform.
    const SampledSignal rec = contravariant(stack.center(), phi, ctx);
    const ComplexField2D again = covariant_fast(Signal(rec), phi, b0, r0, ctx).field;
    if (!again.x_grid().same_as(stack.center().x_grid()) ||
        !again.y_grid().same_as(stack.center().y_grid())) {
        throw GridMismatchError("characterize: re-transform grids do not match the input slices");
    }
    res.roundtrip = matrix_rel_residual(again.values() - stack.center().values(),
                                        stack.center().values());
    if (res.roundtrip > tol.roundtrip) {
        std::snprintf(buf, sizeof(buf), "round-trip residual %.3e exceeds %.1e", res.roundtrip,
                      tol.roundtrip);
        res.reason = buf;
        return res;
    }

    res.accepted = true;
    res.recovered = rec;
    return res;
}

} // namespace ssr
