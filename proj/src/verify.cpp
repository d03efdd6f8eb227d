#include "ssr/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "ssr/fiducial.hpp"
#include "ssr/fourier.hpp"
#include "ssr/metamorph.hpp"

namespace ssr::verify {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

Check make(std::string suite, std::string name, double value, double limit, bool passed,
           double seconds, std::string note = "") {
    return Check{std::move(suite), std::move(name), value, limit, passed, seconds,
                 std::move(note)};
}

Check below(std::string suite, std::string name, double value, double limit, double seconds,
            std::string note = "") {
    const bool ok = std::isfinite(value) && value <= limit;
    return make(std::move(suite), std::move(name), value, limit, ok, seconds, std::move(note));
}

using Vec5 = Eigen::Matrix<double, 5, 1>;

Vec5 to_vec(const GroupElement& g) {
    Vec5 v;
    v << g.s(), g.x(), g.y(), g.b(), g.r();
    return v;
}

GroupElement from_vec(const Vec5& v) { return GroupElement(v[0], v[1], v[2], v[3], v[4]); }

double coord_diff(const GroupElement& a, const GroupElement& b) {
    return (to_vec(a) - to_vec(b)).cwiseAbs().maxCoeff();
}

GroupElement random_element(std::mt19937_64& rng, double box, double r_lo, double r_hi) {
    std::uniform_real_distribution<double> c(-box, box);
    std::uniform_real_distribution<double> r(r_lo, r_hi);
    const double s = c(rng), x = c(rng), y = c(rng), b = c(rng);
    return GroupElement(s, x, y, b, r(rng));
}

RepresentationContext unit_ctx() { return RepresentationContext{PlanckConstant(1.0)}; }

double chirp_diff_norm(const PolyGaussChirp& a, const PolyGaussChirp& b) {
    return norm(add(a, b.scaled(Complex(-1.0, 0.0))));
}

// L2 distance through grid samples, for results whose envelopes were
// computed along different floating-point paths.
double sampled_diff_norm(const PolyGaussChirp& a, const PolyGaussChirp& b) {
    const UniformGrid1D grid = default_grid();
    const SampledSignal sa = Signal(a).sample_on(grid);
    const SampledSignal sb = Signal(b).sample_on(grid);
    return std::sqrt(grid.step()) * (sa.values - sb.values).norm();
}

double max_poly_coeff(const PolyGaussChirp& c) {
    return c.poly().size() == 0 ? 0.0 : c.poly().cwiseAbs().maxCoeff();
}

PolyGaussChirp apply_basis(Basis v, const PolyGaussChirp& f, const RepresentationContext& ctx) {
    return derived_rep_apply(AlgebraVector::unit(v), f, ctx);
}

// Exact Gaussian-pair transform slice at (b, r) = (0, 1), hbar = 1.
Complex gaussian_field_value(double x, double y) {
    return std::exp(Complex(-0.5 * kPi * (x * x + y * y), kPi * x * y));
}

double recovery_error(const SampledSignal& rec, const Signal& expected) {
    const Eigen::VectorXcd ref = expected.sample_on(rec.grid).values;
    return std::sqrt(rec.grid.step()) * (rec.values - ref).norm();
}

struct RatioPair {
    double coarse = 0.0;
    double fine = 0.0;
    double ratio() const { return fine > 0.0 ? coarse / fine : 0.0; }
};

} // namespace

bool all_passed(const std::vector<Check>& checks) {
    for (const Check& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

double total_seconds(const std::vector<Check>& checks) {
    double t = 0.0;
    for (const Check& c : checks) t += c.seconds;
    return t;
}

Check group_matrix_oracle(std::uint64_t seed) {
    Stopwatch sw;
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const GroupElement g1 = random_element(rng, 2.0, std::exp(-1.0), std::exp(1.0));
        const GroupElement g2 = random_element(rng, 2.0, std::exp(-1.0), std::exp(1.0));
        const Matrix4 lhs = to_matrix(multiply(g1, g2));
        const Matrix4 rhs = to_matrix(g1) * to_matrix(g2);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return below("group", "multiply_matches_matrix_product", worst, 1e-12, sw.seconds(),
                 "1000 seeded pairs");
}

Check algebra_commutators() {
    Stopwatch sw;
    const RepresentationContext ctx = unit_ctx();
    const PolyGaussChirp f = hermite(3, ctx.hbar);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const auto vi = AlgebraVector::unit(static_cast<Basis>(i));
            const auto vj = AlgebraVector::unit(static_cast<Basis>(j));
            const PolyGaussChirp lhs = derived_rep_apply(bracket(vi, vj), f, ctx);
            const PolyGaussChirp rhs =
                add(derived_rep_apply(vi, derived_rep_apply(vj, f, ctx), ctx),
                    derived_rep_apply(vj, derived_rep_apply(vi, f, ctx), ctx)
                        .scaled(Complex(-1.0, 0.0)));
            const PolyGaussChirp diff = add(lhs, rhs.scaled(Complex(-1.0, 0.0)));
            worst = std::max(worst, max_poly_coeff(diff));
        }
    }
    return below("algebra", "commutators_match_bracket", worst, 1e-12, sw.seconds(),
                 "all 10 basis pairs on hermite(3)");
}

Check quadratic_identities() {
    Stopwatch sw;
    const RepresentationContext ctx = unit_ctx();
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n) {
        const PolyGaussChirp f = hermite(n, ctx.hbar);
        const PolyGaussChirp xx = apply_basis(Basis::X, apply_basis(Basis::X, f, ctx), ctx);
        const PolyGaussChirp sb = apply_basis(Basis::S, apply_basis(Basis::B, f, ctx), ctx);
        const PolyGaussChirp first = add(xx, sb.scaled(Complex(2.0, 0.0)));
        worst = std::max(worst, norm(first) / std::max(norm(xx), 1e-300));

        const PolyGaussChirp xy = apply_basis(Basis::X, apply_basis(Basis::Y, f, ctx), ctx);
        const PolyGaussChirp yx = apply_basis(Basis::Y, apply_basis(Basis::X, f, ctx), ctx);
        const PolyGaussChirp sr = apply_basis(Basis::S, apply_basis(Basis::R, f, ctx), ctx);
        const PolyGaussChirp second = add(add(xy, yx), sr.scaled(Complex(2.0, 0.0)));
        worst = std::max(worst, norm(second) / std::max(norm(xy), 1e-300));
    }
    return below("algebra", "second_order_identities_vanish", worst, 1e-12, sw.seconds(),
                 "hermite(0..6), residual relative to term size");
}

std::vector<Check> pipeline_checks() {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const Signal phi(gaussian(ctx));
    const double slices[3][2] = {{0.0, 1.0}, {0.5, 0.7}, {-1.0, 2.0}};

    {
        Stopwatch sw;
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const Signal f(hermite(n, ctx.hbar));
            for (const auto& s : slices) {
                const TransformResult fast = covariant_fast(f, phi, s[0], s[1], ctx);
                const TransformResult direct = covariant_direct(
                    f, phi, fast.field.x_grid(), fast.field.y_grid(), s[0], s[1], ctx);
                worst = std::max(
                    worst, (fast.field.values() - direct.field.values()).cwiseAbs().maxCoeff());
            }
        }
        out.push_back(below("pipeline", "fast_matches_direct", worst, 1e-8, sw.seconds(),
                            "hermite(0..4) x 3 slices, N=512"));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        const Signal psi(hermite(2, ctx.hbar));
        for (const auto& [f, b, r] :
             {std::tuple{Signal(hermite(1, ctx.hbar)), 0.5, 0.7},
              std::tuple{Signal(gaussian(ctx)), -1.0, 2.0}}) {
            const TransformResult fast = covariant_fast(f, psi, b, r, ctx);
            const TransformResult direct =
                covariant_direct(f, psi, fast.field.x_grid(), fast.field.y_grid(), b, r, ctx);
            worst = std::max(worst,
                             (fast.field.values() - direct.field.values()).cwiseAbs().maxCoeff());
        }
        out.push_back(below("pipeline", "fast_matches_direct_mixed_fiducial", worst, 1e-8,
                            sw.seconds(), "hermite(2) fiducial"));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const Signal f(hermite(n, ctx.hbar));
            for (const auto& s : slices) {
                const TransformResult fast = covariant_fast(f, phi, s[0], s[1], ctx);
                worst = std::max(worst, std::abs(slice_norm(fast.field) - 1.0));
            }
        }
        out.push_back(below("pipeline", "isometry_default_weight", worst, 1e-7, sw.seconds(),
                            "unit-norm inputs, |norm - 1| under hbar dx dy"));
    }
    {
        Stopwatch sw;
        const TransformResult fast = covariant_fast(phi, phi, 0.0, 1.0, ctx);
        const double n2 = std::pow(slice_norm(fast.field, SliceWeight::Scaled), 2.0);
        out.push_back(below("pipeline", "scaled_weight_gaussian_factor",
                            std::abs(n2 - std::numbers::sqrt2 / 2.0), 1e-8, sw.seconds(),
                            "squared norm under hbar dx dy / sqrt(2r) equals 2^(-1/2)"));
    }
    {
        Stopwatch sw;
        const Signal zero(PolyGaussChirp(Eigen::VectorXcd::Zero(1), Complex(1.0, 0.0),
                                         Complex(0.0, 0.0), Complex(0.0, 0.0)));
        const TransformResult fast = covariant_fast(zero, phi, 0.3, 1.2, ctx);
        out.push_back(below("pipeline", "zero_signal_gives_zero_field",
                            fast.field.values().cwiseAbs().maxCoeff(), 1e-15, sw.seconds()));
    }
    return out;
}

std::vector<Check> orthogonality_checks() {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const Signal phi(gaussian(ctx));
    const MeasureSpec dirac = MeasureSpec::dirac(0.0, 1.0);
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int m = 0; m <= 2; ++m) {
            for (int n = 0; n <= 2; ++n) {
                worst = std::max(worst,
                                 orthogonality_defect(Signal(hermite(m, ctx.hbar)),
                                                      Signal(hermite(n, ctx.hbar)), phi, phi,
                                                      dirac, ctx));
            }
        }
        out.push_back(below("orthogonality", "hermite_grid_defect", worst, 1e-7, sw.seconds(),
                            "3x3 hermite signals, Gaussian fiducials, point mass at (0, 1)"));
    }
    {
        Stopwatch sw;
        const Signal f(hermite(2, ctx.hbar));
        const double d = orthogonality_defect(f, f, Signal(hermite(0, ctx.hbar)),
                                              Signal(hermite(1, ctx.hbar)), dirac, ctx);
        out.push_back(below("orthogonality", "orthogonal_fiducials_defect", d, 1e-8, sw.seconds(),
                            "pairing vanishes when the fiducials are orthogonal"));
    }
    {
        Stopwatch sw;
        const MeasureSpec two = MeasureSpec::discrete(
            {MeasureSpec::Atom{0.0, 1.0, 0.5}, MeasureSpec::Atom{0.3, 1.2, 0.5}});
        const double d =
            orthogonality_defect(Signal(hermite(1, ctx.hbar)), Signal(hermite(1, ctx.hbar)), phi,
                                 phi, two, ctx);
        out.push_back(below("orthogonality", "two_atom_measure_defect", d, 1e-7, sw.seconds()));
    }
    return out;
}

std::vector<Check> reconstruction_checks() {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const Signal phi(gaussian(ctx));
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int n = 0; n <= 4; ++n) {
            const Signal f(hermite(n, ctx.hbar));
            const ComplexField2D field = metamorphism(f, 0.0, 1.0, ctx).field;
            const SampledSignal rec = contravariant(field, phi, ctx);
            worst = std::max(worst, recovery_error(rec, f));
        }
        out.push_back(below("reconstruction", "hermite_round_trip", worst, 1e-5, sw.seconds(),
                            "contravariant after metamorphism, hermite(0..4)"));
    }
    {
        Stopwatch sw;
        const ComplexField2D field = metamorphism(Signal(hermite(0, ctx.hbar)), 0.0, 1.0, ctx).field;
        const ComplexField2D zero = field.with_values(
            Eigen::MatrixXcd::Zero(field.values().rows(), field.values().cols()));
        const SampledSignal rec = contravariant(zero, phi, ctx);
        out.push_back(below("reconstruction", "zero_field_gives_zero_signal", rec.norm(), 1e-12,
                            sw.seconds()));
    }
    return out;
}

std::vector<Check> intertwining_checks(std::uint64_t seed) {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const Signal phi(gaussian(ctx));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xy(-2.0, 2.0), bb(-1.0, 1.0), rr(0.5, 2.0);

    std::vector<Point4> points(50);
    for (Point4& p : points) p = Point4{xy(rng), xy(rng), bb(rng), rr(rng)};

    {
        Stopwatch sw;
        const double res = intertwining_residual(GroupElement::identity(),
                                                 Signal(hermite(1, ctx.hbar)), phi,
                                                 std::span(points.data(), 5), ctx);
        out.push_back(below("intertwining", "identity_element", res, 1e-12, sw.seconds()));
    }
    {
        Stopwatch sw;
        const GroupElement g(0.2, 0.5, -0.3, 0.0, 1.0);
        const double res =
            intertwining_residual(g, Signal(hermite(1, ctx.hbar)), phi, points, ctx);
        out.push_back(below("intertwining", "position_momentum_shift", res, 1e-7, sw.seconds(),
                            "g = (0.2, 0.5, -0.3, 0, 1)"));
    }
    {
        Stopwatch sw;
        const GroupElement g(0.0, 0.0, 0.0, 0.4, 1.3);
        const double res =
            intertwining_residual(g, Signal(hermite(1, ctx.hbar)), phi, points, ctx);
        out.push_back(below("intertwining", "shear_squeeze", res, 1e-6, sw.seconds(),
                            "g = (0, 0, 0, 0.4, 1.3), 50 seeded points"));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
            const Signal f(hermite(k % 3, ctx.hbar));
            worst = std::max(worst, intertwining_residual(g, f, phi, points, ctx));
        }
        out.push_back(below("intertwining", "seeded_sweep", worst, 1e-6, sw.seconds(),
                            "20 seeded g, 50 points each"));
    }
    return out;
}

std::vector<Check> image_checks() {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const Signal phi(gaussian(ctx));
    const double h = 1e-3;

    {
        Stopwatch sw;
        const SliceStack stack = metamorphism_stack(Signal(hermite(3, ctx.hbar)), 0.0, 1.0, h, h, ctx);
        const SliceStack fine = metamorphism_stack(Signal(hermite(3, ctx.hbar)), 0.0, 1.0, h / 2.0,
                                                   h / 2.0, ctx);
        const CauchyRiemannResiduals cr = cauchy_riemann_residuals(stack);
        const CauchyRiemannResiduals cr2 = cauchy_riemann_residuals(fine);
        const StructuralResiduals st = structural_residuals(stack);
        const double t = sw.seconds() / 5.0;
        out.push_back(below("image", "c1_on_gaussian_transform", cr.c1, 1e-6, t,
                            "hermite(3) stack, spectral"));
        out.push_back(below("image", "c2_on_gaussian_transform", cr.c2, 1e-4, t,
                            "finite differences, h = 1e-3"));
        const double ratio = cr2.c2 > 0.0 ? cr.c2 / cr2.c2 : 0.0;
        out.push_back(make("image", "c2_step_halving_ratio", ratio, 4.0,
                           ratio >= 3.0 && ratio <= 5.0, t, "must land in [3, 5]"));
        out.push_back(below("image", "s2_implied_by_first_three", st.s2, 1e-4, t,
                            "s2 passes whenever c1, c2, s1 do"));
    }
    {
        Stopwatch sw;
        const SliceStack stack = metamorphism_stack(Signal(hermite(2, ctx.hbar)), 0.0, 1.0, h, h, ctx);
        const SliceStack fine = metamorphism_stack(Signal(hermite(2, ctx.hbar)), 0.0, 1.0, h / 2.0,
                                                   h / 2.0, ctx);
        const StructuralResiduals st = structural_residuals(stack);
        const StructuralResiduals st2 = structural_residuals(fine);
        const double t = sw.seconds() / 4.0;
        out.push_back(below("image", "s1_on_gaussian_transform", st.s1, 1e-4, t));
        out.push_back(below("image", "s2_on_gaussian_transform", st.s2, 1e-4, t));
        const double ratio1 = st2.s1 > 0.0 ? st.s1 / st2.s1 : 0.0;
        const double ratio2 = st2.s2 > 0.0 ? st.s2 / st2.s2 : 0.0;
        out.push_back(make("image", "s1_step_halving_ratio", ratio1, 4.0,
                           ratio1 >= 3.0 && ratio1 <= 5.0, t, "must land in [3, 5]"));
        out.push_back(make("image", "s2_step_halving_ratio", ratio2, 4.0,
                           ratio2 >= 3.0 && ratio2 <= 5.0, t, "must land in [3, 5]"));
    }
    {
        Stopwatch sw;
        const Signal airy(airy_type(FiducialSpec{0.0, -1.0, 1.0, 1.0, 0.0}, ctx));
        const Signal f(hermite(0, ctx.hbar));
        const SliceStack stack = make_slice_stack(
            [&](double b, double r) { return covariant_fast(f, airy, b, r, ctx).field; }, 0.0,
            1.0, h, h);
        const CauchyRiemannResiduals cr = cauchy_riemann_residuals(stack);
        const StructuralResiduals st = structural_residuals(stack);
        const double t = sw.seconds() / 3.0;
        out.push_back(make("image", "cubic_phase_control_fails_c1", cr.c1, 1e-2, cr.c1 > 1e-2, t,
                           "c1 must exceed the limit for a non-Gaussian fiducial"));
        out.push_back(below("image", "cubic_phase_control_passes_s1", st.s1, 1e-4, t,
                            "structural conditions hold for any fiducial"));
        out.push_back(below("image", "cubic_phase_control_passes_s2", st.s2, 1e-4, t));
    }
    {
        Stopwatch sw;
        const Signal f(hermite(1, ctx.hbar));
        const CharacterizationResult res = characterize(
            [&](double b, double r) { return metamorphism(f, b, r, ctx).field; }, phi,
            CharacterizeTolerances{}, ctx);
        const bool ok = res.accepted && res.recovered.has_value();
        const double err = ok ? recovery_error(*res.recovered, f) : 1.0;
        out.push_back(make("image", "characterize_accepts_transform", err, 1e-5,
                           ok && err < 1e-5, sw.seconds(),
                           ok ? "recovered signal matches hermite(1)" : res.reason));
    }
    {
        Stopwatch sw;
        const Signal g(gaussian(ctx));
        const CharacterizationResult res = characterize(
            [&](double b, double r) {
                ComplexField2D field = metamorphism(g, b, r, ctx).field;
                Eigen::MatrixXcd v = field.values();
                const Eigen::ArrayXd xs = field.x_grid().points();
                for (Eigen::Index k = 0; k < v.rows(); ++k) v.row(k) *= xs[k];
                return field.with_values(std::move(v));
            },
            phi, CharacterizeTolerances{}, ctx);
        const bool ok = !res.accepted && res.reason.find("C1") != std::string::npos;
        out.push_back(make("image", "characterize_rejects_x_scaled_field", res.c1, 1e-2,
                           ok && res.c1 > 1e-2, sw.seconds(),
                           ok ? "rejected: " + res.reason : "expected a C1 rejection"));
    }
    {
        Stopwatch sw;
        const ComplexField2D model = metamorphism(phi, 0.0, 1.0, ctx).field;
        const CharacterizationResult res = characterize(
            [&](double b, double r) {
                ComplexField2D field = metamorphism(phi, b, r, ctx).field;
                return field.with_values(
                    Eigen::MatrixXcd::Zero(model.values().rows(), model.values().cols()));
            },
            phi, CharacterizeTolerances{}, ctx);
        const bool ok = res.accepted && res.recovered && res.recovered->norm() < 1e-12;
        out.push_back(make("image", "characterize_accepts_zero_field",
                           res.recovered ? res.recovered->norm() : 1.0, 1e-12, ok, sw.seconds()));
    }
    {
        Stopwatch sw;
        out.push_back(make("image", "chart_point_example",
                           std::abs(chart_w(0.0, 1.0) - kI) +
                               std::abs(chart_z(1.0, 0.0, 0.0, 1.0) - Complex(1.0, 0.0)),
                           1e-15, std::abs(chart_w(0.0, 1.0) - kI) < 1e-15 &&
                                      std::abs(chart_z(1.0, 0.0, 0.0, 1.0) - 1.0) < 1e-15,
                           sw.seconds(), "w(0, 1) = i and z(1, 0, 0, 1) = 1"));
    }
    {
        Stopwatch sw;
        const SliceStack stack = metamorphism_stack(phi, 0.0, 1.0, h, h, ctx);
        const SliceStack fine = metamorphism_stack(phi, 0.0, 1.0, h / 2.0, h / 2.0, ctx);
        const ComplexChart chart = to_complex_chart(stack);
        const ComplexChart chart_fine = to_complex_chart(fine);

        // Re-multiplying the chart function by the inverse factor returns the slice.
        double remul = 0.0;
        const Complex w = chart.w();
        for (Eigen::Index i = 0; i < chart.y_grid.count(); ++i) {
            for (Eigen::Index k = 0; k < chart.x_grid.count(); ++k) {
                const double x = chart.x_grid.point(k);
                const Complex back = chart.f2_center(k, i) *
                                     std::exp(-kPi * 1.0 * kI * x * x / w) * std::sqrt(1.0);
                remul = std::max(remul, std::abs(back - chart.f_center(k, i)));
            }
        }
        const double t = sw.seconds() / 4.0;
        out.push_back(below("image", "chart_round_trip", remul, 1e-12, t));

        const double p = parabolic_residual(chart);
        const double p2 = parabolic_residual(chart_fine);
        out.push_back(below("image", "parabolic_residual", p, 1e-3, t, "Gaussian chart, h = 1e-3"));
        const double ratio = p2 > 0.0 ? p / p2 : 0.0;
        out.push_back(make("image", "parabolic_step_halving_ratio", ratio, 4.0,
                           ratio >= 3.0 && ratio <= 5.0, t, "must land in [3, 5]"));

        // Add z^2 to the chart function of every slice: no longer a solution.
        auto perturb = [&](const ComplexField2D& f) {
            const Complex ws = chart_w(f.b(), f.r());
            const double sq = std::sqrt(f.r());
            Eigen::MatrixXcd v = f.values();
            for (Eigen::Index i = 0; i < f.y_grid().count(); ++i) {
                const double y = f.y_grid().point(i);
                for (Eigen::Index k = 0; k < f.x_grid().count(); ++k) {
                    const double x = f.x_grid().point(k);
                    const Complex z = x + ws * y;
                    v(k, i) += sq * std::exp(-kPi * kI * x * x / ws) * z * z;
                }
            }
            return f.with_values(std::move(v));
        };
        const SliceStack bad(perturb(stack.center()), perturb(stack.b_plus()),
                             perturb(stack.b_minus()), perturb(stack.r_plus()),
                             perturb(stack.r_minus()));
        const double pbad = parabolic_residual(to_complex_chart(bad));
        out.push_back(make("image", "parabolic_rejects_z_squared", pbad, 1e-1, pbad > 1e-1, t,
                           "perturbed chart must fail"));
    }
    return out;
}

std::vector<Check> fiducial_checks() {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    const PolyGaussChirp g = gaussian(ctx);

    {
        Stopwatch sw;
        out.push_back(below("fiducial", "gaussian_unit_norm", std::abs(norm(g) - 1.0), 1e-12,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        const UniformGrid1D grid = fiducial_default_grid();
        const SampledSignal a = airy_type(FiducialSpec{0.0, -1.0, 1.0, 0.0, 0.0}, ctx);
        const Eigen::VectorXcd ref = Signal(g).sample_on(grid).values;
        out.push_back(below("fiducial", "cubic_branch_reduces_to_gaussian",
                            (a.values - ref).cwiseAbs().maxCoeff(), 1e-9, sw.seconds(),
                            "E = (0, -1, 1, 0, 0)"));
    }
    {
        Stopwatch sw;
        const UniformGrid1D grid = fiducial_default_grid();
        const SampledSignal a =
            generic_type(FiducialSpec{1.0 / (4.0 * kPi), 0.0, 0.0, 2.0, 1.0}, ctx);
        const Eigen::VectorXcd ref = Signal(g).sample_on(grid).values;
        out.push_back(below("fiducial", "power_branch_reduces_to_gaussian",
                            (a.values - ref).cwiseAbs().maxCoeff(), 1e-9, sw.seconds(),
                            "E = (1/(4 pi), 0, 0, 2, 1)"));
    }
    {
        Stopwatch sw;
        const SampledSignal a = airy_type(FiducialSpec{0.0, -1.0, 1.0, 1.0, 0.0}, ctx);
        const SampledSignal b = airy_type(FiducialSpec{0.0, -1.0, 1.0, 0.0, 0.0}, ctx);
        out.push_back(below("fiducial", "cubic_phase_preserves_modulus",
                            (a.values.cwiseAbs() - b.values.cwiseAbs()).cwiseAbs().maxCoeff(),
                            1e-9, sw.seconds(), "cubic term is pure phase"));
    }
    {
        Stopwatch sw;
        const FiducialSpec specs[] = {
            {0.0, -1.0, 1.0, 0.0, 0.0},          {0.0, -1.0, 1.0, 1.0, 0.0},
            {0.0, -0.5, 1.0, 0.7, 0.0},          {1.0 / (4.0 * kPi), 0.0, 0.0, 2.0, 1.0},
            {0.1, 0.3, 0.5, 2.0, 1.0},           {0.0, 0.0, 1.0, 1.0, 0.5},
            {3.0 / (4.0 * kPi), 0.0, 0.0, 1.0, 1.0},
        };
        double worst_norm = 0.0;
        double worst_res = 0.0;
        for (const FiducialSpec& spec : specs) {
            const Signal f = build_fiducial(spec, ctx);
            worst_norm = std::max(worst_norm, std::abs(f.norm() - 1.0));
            worst_res = std::max(worst_res, annihilation_residual(spec, f, ctx));
        }
        const double t = sw.seconds() / 2.0;
        out.push_back(below("fiducial", "constructed_unit_norms", worst_norm, 1e-10, t,
                            "7 specs across both branches"));
        out.push_back(below("fiducial", "self_annihilation_residuals", worst_res, 1e-7, t));
    }
    {
        Stopwatch sw;
        const double res = annihilation_residual(FiducialSpec{0.0, -1.0, 1.0, 0.0, 0.0},
                                                 Signal(hermite(1, ctx.hbar)), ctx);
        out.push_back(make("fiducial", "lowering_rejects_first_excited", res, 0.1, res > 0.1,
                           sw.seconds(), "hermite(1) must fail the Gaussian spec"));
    }
    {
        Stopwatch sw;
        bool ok = false;
        try {
            airy_type(FiducialSpec{0.0, 0.5, 1.0, 0.0, 0.0}, ctx);
        } catch (const InvalidSpecError& e) {
            ok = std::string(e.what()).find("square integrability") != std::string::npos;
        }
        out.push_back(make("fiducial", "rejects_non_integrable_cubic", ok ? 0.0 : 1.0, 0.5, ok,
                           sw.seconds(), "E_x >= 0 names the integrability condition"));
    }
    {
        Stopwatch sw;
        bool ok = false;
        try {
            generic_type(FiducialSpec{0.0, 0.0, 1.0, -2.0, 1.0}, ctx);
        } catch (const InvalidSpecError& e) {
            ok = std::string(e.what()).find("E_b/E_r > 0") != std::string::npos;
        }
        out.push_back(make("fiducial", "rejects_wrong_sign_power_branch", ok ? 0.0 : 1.0, 0.5, ok,
                           sw.seconds()));
    }
    {
        Stopwatch sw;
        bool ok = false;
        try {
            generic_type(FiducialSpec{0.0, 0.0, 0.0, 2.0, 1.0}, ctx);
        } catch (const InvalidSpecError& e) {
            ok = std::string(e.what()).find("kappa") != std::string::npos;
        }
        out.push_back(make("fiducial", "rejects_singular_origin_power", ok ? 0.0 : 1.0, 0.5, ok,
                           sw.seconds(), "E_y = 0 with negative branch exponent"));
    }
    return out;
}

namespace {

std::vector<Check> group_suite(std::uint64_t seed) {
    std::vector<Check> out;
    out.push_back(group_matrix_oracle(seed));
    std::mt19937_64 rng(seed + 1);

    {
        Stopwatch sw;
        double worst_mul = 0.0, worst_mat = 0.0;
        for (int k = 0; k < 200; ++k) {
            const GroupElement g = random_element(rng, 2.0, 0.5, 2.0);
            worst_mul = std::max(worst_mul,
                                 coord_diff(multiply(g, inverse(g)), GroupElement::identity()));
            worst_mat = std::max(
                worst_mat,
                (to_matrix(inverse(g)) - Matrix4(to_matrix(g).inverse())).cwiseAbs().maxCoeff());
        }
        out.push_back(below("group", "inverse_cancels", worst_mul, 1e-12, sw.seconds()));
        out.push_back(below("group", "inverse_matches_matrix_inverse", worst_mat, 1e-10,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
            const GroupElement a = random_element(rng, 2.0, 0.5, 2.0);
            const GroupElement b = random_element(rng, 2.0, 0.5, 2.0);
            const GroupElement c = random_element(rng, 2.0, 0.5, 2.0);
            worst = std::max(worst, coord_diff(multiply(multiply(a, b), c),
                                               multiply(a, multiply(b, c))));
        }
        out.push_back(below("group", "associativity", worst, 1e-12, sw.seconds()));
    }
    {
        Stopwatch sw;
        std::uniform_real_distribution<double> c(-2.0, 2.0);
        std::uniform_real_distribution<double> rd(0.5, 2.0);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double b = c(rng), r = rd(rng);
            const double x1 = c(rng), y1 = c(rng), x2 = c(rng), y2 = c(rng);
            // (x, y) -> (r x - (b/r) y, y/r) is the coordinate action; it has
            // unit determinant, so the symplectic form is preserved.
            const double tx1 = r * x1 - b / r * y1, ty1 = y1 / r;
            const double tx2 = r * x2 - b / r * y2, ty2 = y2 / r;
            worst = std::max(worst, std::abs(symplectic_form(tx1, ty1, tx2, ty2) -
                                             symplectic_form(x1, y1, x2, y2)));
        }
        out.push_back(below("group", "shear_squeeze_preserves_symplectic_form", worst, 1e-12,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        const double fd = 1e-5;
        double worst_left = 0.0, worst_right = 0.0, worst_mod = 0.0;
        for (int k = 0; k < 20; ++k) {
            const GroupElement g0 = random_element(rng, 1.0, 0.5, 2.0);
            const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
            Eigen::Matrix<double, 5, 5> jl, jr;
            for (int j = 0; j < 5; ++j) {
                Vec5 vp = to_vec(g), vm = to_vec(g);
                vp[j] += fd;
                vm[j] -= fd;
                jl.col(j) = (to_vec(multiply(g0, from_vec(vp))) -
                             to_vec(multiply(g0, from_vec(vm)))) / (2.0 * fd);
                jr.col(j) = (to_vec(multiply(from_vec(vp), g0)) -
                             to_vec(multiply(from_vec(vm), g0))) / (2.0 * fd);
            }
            const double left_g = measures(g).left_density;
            const double left_tg = measures(multiply(g0, g)).left_density;
            worst_left = std::max(worst_left,
                                  std::abs(left_tg * std::abs(jl.determinant()) - left_g) / left_g);
            const double right_g = measures(g).right_density;
            const double right_tg = measures(multiply(g, g0)).right_density;
            worst_right = std::max(
                worst_right, std::abs(right_tg * std::abs(jr.determinant()) - right_g) / right_g);
            const HaarData m = measures(g);
            worst_mod = std::max(worst_mod,
                                 std::abs(m.left_density / m.right_density - m.modular));
        }
        out.push_back(below("group", "left_measure_invariance", worst_left, 1e-6, sw.seconds(),
                            "finite-difference Jacobian"));
        out.push_back(below("group", "right_measure_invariance", worst_right, 1e-6, sw.seconds()));
        out.push_back(below("group", "modular_function_ratio", worst_mod, 1e-15, sw.seconds()));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const GroupElement g = random_element(rng, 2.0, 0.5, 2.0);
            const CenterDecomposition d = center_decomposition(g);
            const GroupElement back =
                multiply(section(d.x, d.y, d.b, d.r), GroupElement(d.center, 0, 0, 0, 1));
            worst = std::max(worst, coord_diff(back, g));
        }
        out.push_back(below("group", "center_decomposition_recomposes", worst, 1e-12,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        std::uniform_real_distribution<double> t(-1.0, 1.0);
        for (int v = 0; v < 5; ++v) {
            for (int k = 0; k < 20; ++k) {
                const double a = t(rng), b = t(rng);
                const GroupElement lhs = multiply(exp_one_param(static_cast<Basis>(v), a),
                                                  exp_one_param(static_cast<Basis>(v), b));
                worst = std::max(worst,
                                 coord_diff(lhs, exp_one_param(static_cast<Basis>(v), a + b)));
            }
        }
        out.push_back(below("group", "one_parameter_subgroups", worst, 1e-12, sw.seconds()));
    }
    return out;
}

std::vector<Check> algebra_suite() {
    return {algebra_commutators(), quadratic_identities()};
}

std::vector<Check> signals_suite(std::uint64_t seed) {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    std::mt19937_64 rng(seed + 2);

    {
        Stopwatch sw;
        const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
        const double root2 = std::pow(2.0, 0.25);
        const double worst = std::max(std::abs(g.evaluate(0.0) - root2),
                                      std::abs(g.evaluate(1.0) - root2 * std::exp(-kPi)));
        out.push_back(below("signals", "gaussian_point_values", worst, 1e-12, sw.seconds()));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int m = 0; m <= 8; ++m) {
            for (int n = 0; n <= 8; ++n) {
                const Complex ip = inner_product(hermite(m, ctx.hbar), hermite(n, ctx.hbar));
                worst = std::max(worst, std::abs(ip - (m == n ? 1.0 : 0.0)));
            }
        }
        out.push_back(below("signals", "hermite_orthonormality", worst, 1e-10, sw.seconds(),
                            "orders 0..8, exact moment recurrence"));
    }
    {
        Stopwatch sw;
        const UniformGrid1D grid = default_grid();
        double worst = 0.0;
        for (int m = 0; m <= 6; ++m) {
            for (int n = m; n <= 6; ++n) {
                const Complex exact = inner_product(hermite(m, ctx.hbar), hermite(n, ctx.hbar));
                const Complex quad =
                    inner_product(Signal(hermite(m, ctx.hbar)).sample_on(grid),
                                  Signal(hermite(n, ctx.hbar)).sample_on(grid));
                worst = std::max(worst, std::abs(exact - quad));
            }
        }
        out.push_back(below("signals", "exact_vs_quadrature_inner_products", worst, 1e-9,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        Eigen::VectorXcd one(1);
        one << Complex(std::pow(2.0, 0.25), 0.0);
        const PolyGaussChirp f(one, Complex(2.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0));
        const double val = std::abs(inner_product(f, f) - std::numbers::sqrt2 / 2.0);
        out.push_back(below("signals", "unnormalized_pair_at_doubled_hbar", val, 1e-12,
                            sw.seconds(), "norm squared 2^(-1/2)"));
    }
    {
        Stopwatch sw;
        const UniformGrid1D grid = default_grid();
        Eigen::MatrixXcd col(grid.count(), 1);
        for (Eigen::Index j = 0; j < grid.count(); ++j) {
            const double u = grid.point(j);
            col(j, 0) = std::exp(-kPi * u * u);
        }
        const PartialFourierResult pf = partial_fourier(col, grid, 1.0, -1, 2);
        std::uniform_int_distribution<Eigen::Index> pick(pf.x_grid.count() / 4,
                                                         3 * pf.x_grid.count() / 4 - 1);
        double worst_quad = 0.0, worst_analytic = 0.0;
        for (int k = 0; k < 10; ++k) {
            const Eigen::Index idx = pick(rng);
            const double x = pf.x_grid.point(idx);
            Complex direct{0.0, 0.0};
            for (Eigen::Index j = 0; j < grid.count(); ++j) {
                const double u = grid.point(j);
                direct += std::exp(-kPi * u * u) * std::polar(1.0, -2.0 * kPi * x * u);
            }
            direct *= grid.step();
            worst_quad = std::max(worst_quad, std::abs(pf.values(idx, 0) - direct));
            worst_analytic = std::max(worst_analytic,
                                      std::abs(pf.values(idx, 0) - std::exp(-kPi * x * x)));
        }
        const double t = sw.seconds() / 2.0;
        out.push_back(below("signals", "partial_fourier_matches_quadrature", worst_quad, 1e-12, t,
                            "10 seeded dual points"));
        out.push_back(below("signals", "partial_fourier_gaussian_analytic", worst_analytic, 1e-8,
                            t));

        const double in2 = col.col(0).squaredNorm() * grid.step();
        const double out2 = pf.values.col(0).squaredNorm() * pf.x_grid.step() * 1.0;
        out.push_back(below("signals", "partial_fourier_parseval",
                            std::abs(in2 - out2) / in2, 1e-8, t));

        const PartialFourierResult back = partial_fourier(pf.values, pf.x_grid, 1.0, 1, 1);
        // One hbar factor restores the inverse; the padded grid contains the
        // original window centrally.
        double worst_inv = 0.0;
        const Eigen::Index off = back.x_grid.nearest_index(grid.start());
        for (Eigen::Index j = 0; j < grid.count(); ++j) {
            worst_inv = std::max(worst_inv, std::abs(back.values(off + j, 0) - col(j, 0)));
        }
        out.push_back(below("signals", "partial_fourier_inverse_round_trip", worst_inv, 1e-8, t));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
        double prev = -1.0;
        double min_ratio = 1e300;
        bool ok = true;
        for (Eigen::Index n = 32; n <= 512; n *= 2) {
            const UniformGrid1D grid = UniformGrid1D::centered(8.0, n);
            const SampledSignal s = Signal(g).sample_on(grid);
            const double err = std::abs(inner_product(s, s) - 1.0);
            if (prev >= 0.0 && prev > 1e-12) {
                const double ratio = prev / std::max(err, 1e-300);
                min_ratio = std::min(min_ratio, ratio);
                ok = ok && (ratio >= 10.0 || err <= 1e-12);
            }
            prev = err;
        }
        out.push_back(make("signals", "quadrature_halving_convergence", min_ratio, 10.0, ok,
                           sw.seconds(), "error shrinks at least 10x per halving until 1e-12"));
    }
    {
        Stopwatch sw;
        bool ok = false;
        try {
            const SampledSignal a = Signal(gaussian_chirp(ctx.hbar)).sample_on(default_grid());
            const SampledSignal b =
                Signal(gaussian_chirp(ctx.hbar)).sample_on(UniformGrid1D::centered(8.0, 256));
            (void)inner_product(a, b);
        } catch (const GridMismatchError&) {
            ok = true;
        }
        out.push_back(make("signals", "grid_mismatch_is_an_error", ok ? 0.0 : 1.0, 0.5, ok,
                           sw.seconds()));
    }
    {
        Stopwatch sw;
        const UniformGrid1D grid = default_grid();
        Eigen::MatrixXcd v(grid.count(), grid.count());
        for (Eigen::Index i = 0; i < grid.count(); ++i) {
            for (Eigen::Index k = 0; k < grid.count(); ++k) {
                v(k, i) = gaussian_field_value(grid.point(k), grid.point(i));
            }
        }
        const ComplexField2D f(grid, grid, v, 0.0, 1.0, 1.0);
        const Complex def = slice_inner_product(f, f, MeasureSpec::dirac(0.0, 1.0));
        const Complex pap =
            slice_inner_product(f, f, MeasureSpec::dirac(0.0, 1.0, SliceWeight::Scaled));
        const double t = sw.seconds() / 2.0;
        out.push_back(below("signals", "slice_pairing_default_weight", std::abs(def - 1.0), 1e-10,
                            t, "Gaussian slice integrates to 1"));
        out.push_back(below("signals", "slice_pairing_scaled_weight",
                            std::abs(pap - std::numbers::sqrt2 / 2.0), 1e-10, t));
    }
    return out;
}

std::vector<Check> representations_suite(std::uint64_t seed) {
    std::vector<Check> out;
    const RepresentationContext ctx = unit_ctx();
    std::mt19937_64 rng(seed + 3);

    {
        Stopwatch sw;
        const PolyGaussChirp f = hermite(2, ctx.hbar);
        const PolyGaussChirp central = schrodinger_apply(GroupElement(0.7, 0, 0, 0, 1), f, ctx);
        const Complex phase = std::polar(1.0, 2.0 * kPi * 0.7);
        const double worst = chirp_diff_norm(central, f.scaled(phase));
        out.push_back(below("representations", "central_element_is_a_phase", worst, 1e-12,
                            sw.seconds()));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
        const PolyGaussChirp dil = schrodinger_apply(GroupElement(0, 0, 0, 0, 2.0), g, ctx);
        const double worst = std::abs(dil.alpha() - Complex(4.0, 0.0)) +
                             std::abs(dil.poly()[0] -
                                      Complex(std::numbers::sqrt2 * std::pow(2.0, 0.25), 0.0));
        out.push_back(below("representations", "dilation_rescales_gaussian", worst, 1e-12,
                            sw.seconds(), "r = 2 widens alpha to 4 and scales by sqrt(2)"));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp f = hermite(2, ctx.hbar);
        const SampledSignal fs = Signal(f).sample_on(default_grid());
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        std::uniform_real_distribution<double> rd(0.8, 1.25);
        double worst = 0.0;
        for (int k = 0; k < 20; ++k) {
            const GroupElement g(c(rng), c(rng), c(rng), c(rng), rd(rng));
            const SampledSignal viaExact = Signal(schrodinger_apply(g, f, ctx)).sample_on(fs.grid);
            const SampledSignal viaGrid = schrodinger_apply_sampled(g, fs, ctx);
            worst = std::max(worst, (viaExact.values - viaGrid.values).cwiseAbs().maxCoeff());
        }
        out.push_back(below("representations", "sampled_path_matches_exact_path", worst, 1e-8,
                            sw.seconds(), "20 seeded elements on hermite(2)"));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp f = hermite(1, ctx.hbar);
        const GroupElement g1(0, 1, 0, 0, 1), g2(0, 0, 1, 0, 1);
        const double fixed = sampled_diff_norm(
            schrodinger_apply(g1, schrodinger_apply(g2, f, ctx), ctx),
            schrodinger_apply(multiply(g1, g2), f, ctx));
        double worst = fixed;
        for (int k = 0; k < 50; ++k) {
            const GroupElement a = random_element(rng, 1.0, 0.5, 2.0);
            const GroupElement b = random_element(rng, 1.0, 0.5, 2.0);
            worst = std::max(worst, sampled_diff_norm(
                                        schrodinger_apply(a, schrodinger_apply(b, f, ctx), ctx),
                                        schrodinger_apply(multiply(a, b), f, ctx)));
        }
        out.push_back(below("representations", "homomorphism_on_exact_family", worst, 1e-10,
                            sw.seconds(), "includes (0,1,0,0,1)*(0,0,1,0,1) = (1,1,1,0,1)"));
    }
    {
        Stopwatch sw;
        const FieldEvaluator f = [](double x, double y, double b, double r) {
            return std::exp(Complex(-0.1 * (x * x + y * y) - 0.05 * (r - 1.0) * (r - 1.0) -
                                        0.02 * b * b,
                                    0.3 * x - 0.7 * y + 0.2 * b + 0.1 * r));
        };
        std::uniform_real_distribution<double> xy(-2.0, 2.0), bb(-1.0, 1.0), rr(0.5, 2.0);
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
            const Point4 p{xy(rng), xy(rng), bb(rng), rr(rng)};
            const double dy = p.y - g.y();
            const Complex direct =
                std::polar(1.0, 2.0 * kPi * (g.s() + g.x() * dy - 0.5 * g.b() * dy * dy)) *
                f((p.x - g.x() + g.b() * dy) / g.r(), g.r() * dy,
                  (p.b - g.b()) / (g.r() * g.r()), p.r / g.r());
            worst = std::max(worst, std::abs(quasi_regular_point(g, f, p, ctx) - direct));
        }
        out.push_back(below("representations", "quasi_regular_closed_form", worst, 1e-12,
                            sw.seconds(), "100 seeded points"));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
        AlgebraCombo lowering;
        lowering[Basis::X] = Complex(-1.0, 0.0);
        lowering[Basis::Y] = Complex(0.0, 1.0);
        const double v1 = norm(derived_rep_apply(lowering, g, ctx));
        AlgebraCombo affine;
        affine[Basis::S] = Complex(0.0, 1.0 / (4.0 * kPi));
        affine[Basis::B] = Complex(0.0, 2.0);
        affine[Basis::R] = Complex(1.0, 0.0);
        const double v2 = norm(derived_rep_apply(affine, g, ctx));
        out.push_back(below("representations", "gaussian_annihilators", std::max(v1, v2), 1e-14,
                            sw.seconds(), "-X + iY and i/(4 pi hbar) S + 2i B + R"));
    }
    {
        Stopwatch sw;
        const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
        const UniformGrid1D grid = default_grid();

        auto err_for = [&](Basis v, double t) {
            const SampledSignal num = derived_rep_numeric(v, g, t, ctx, grid);
            const SampledSignal ref = Signal(derived_rep_apply(AlgebraVector::unit(v), g, ctx))
                                          .sample_on(grid);
            return (num.values - ref.values).cwiseAbs().maxCoeff();
        };
        const double errS = err_for(Basis::S, 1e-4);
        const double errR = err_for(Basis::R, 1e-4);
        const double t = sw.seconds() / 3.0;
        out.push_back(below("representations", "numeric_derived_matches_table",
                            std::max(errS, errR), 1e-6, t, "central difference, t = 1e-4"));
        const double ratio = err_for(Basis::R, 2e-4) / std::max(errR, 1e-300);
        out.push_back(make("representations", "numeric_derived_second_order", ratio, 4.0,
                           ratio >= 3.5 && ratio <= 4.5, t, "halving t quarters the error"));
    }
    {
        Stopwatch sw;
        const LieSteps steps;
        const FieldEvaluator f = [](double x, double y, double b, double r) {
            return Complex(x * y + 0.5 * b * y * y + x * x, 0.3 * x - 0.1 * y * r);
        };
        const Point4 p{0.4, -0.3, 0.2, 1.1};
        const Complex ls = lie_derivative_apply(Basis::S, f, p, steps, ctx);
        const double s_err = std::abs(ls - (-2.0 * kPi * kI) * f(p.x, p.y, p.b, p.r));
        const FieldEvaluator fb = [](double, double, double b, double) { return Complex(b, 0.0); };
        const double b_err =
            std::abs(lie_derivative_apply(Basis::B, fb, p, steps, ctx) - p.r * p.r);
        const double t = sw.seconds();
        out.push_back(below("representations", "lie_derivative_table_cases",
                            std::max(s_err, b_err), 1e-9, t,
                            "S is multiplication, B is r^2 d/db"));
    }
    {
        Stopwatch sw;
        const LieSteps steps;
        const FieldEvaluator f = [](double x, double y, double b, double r) {
            return Complex(x * y + 0.5 * b * y * y + x * x + 0.1 * r * r, 0.0);
        };
        const Point4 p{0.4, -0.3, 0.2, 1.1};
        const FieldEvaluator lb = [&](double x, double y, double b, double r) {
            return lie_derivative_apply(Basis::B, f, Point4{x, y, b, r}, steps, ctx);
        };
        const FieldEvaluator ly = [&](double x, double y, double b, double r) {
            return lie_derivative_apply(Basis::Y, f, Point4{x, y, b, r}, steps, ctx);
        };
        const Complex comm = lie_derivative_apply(Basis::Y, lb, p, steps, ctx) -
                             lie_derivative_apply(Basis::B, ly, p, steps, ctx);
        const Complex direct = lie_derivative_apply(Basis::X, f, p, steps, ctx);
        out.push_back(below("representations", "lie_derivative_commutator", std::abs(comm - direct),
                            1e-6, sw.seconds(), "[Y, B] realizes X on a polynomial field"));
    }
    {
        Stopwatch sw;
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
            const PolyGaussChirp f = hermite(k % 5, ctx.hbar);
            worst = std::max(worst, std::abs(norm(schrodinger_apply(g, f, ctx)) - 1.0));
        }
        out.push_back(below("representations", "unitarity", worst, 1e-8, sw.seconds(),
                            "100 seeded elements, hermite(0..4)"));
    }
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"group",    "algebra",       "signals",        "representations", "fiducial",
            "pipeline", "orthogonality", "reconstruction", "intertwining",    "image"};
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "group") return group_suite(seed);
    if (name == "algebra") return algebra_suite();
    if (name == "signals") return signals_suite(seed);
    if (name == "representations") return representations_suite(seed);
    if (name == "fiducial") return fiducial_checks();
    if (name == "pipeline") return pipeline_checks();
    if (name == "orthogonality") return orthogonality_checks();
    if (name == "reconstruction") return reconstruction_checks();
    if (name == "intertwining") return intertwining_checks(seed);
    if (name == "image") return image_checks();
    throw InvalidSpecError("verify: unknown suite \"" + name + "\"");
}

} // namespace ssr::verify
