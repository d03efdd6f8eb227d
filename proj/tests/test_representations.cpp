#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ssr/representations.hpp"

using namespace ssr;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double chirp_distance(const PolyGaussChirp& a, const PolyGaussChirp& b) {
    return norm(add(a, b.scaled(Complex(-1.0, 0.0))));
}

// L2 distance through grid samples; usable when the envelopes were computed
// along different floating-point paths and are no longer bit-identical.
double sampled_distance(const PolyGaussChirp& a, const PolyGaussChirp& b) {
    const UniformGrid1D grid = default_grid();
    const SampledSignal sa = Signal(a).sample_on(grid);
    const SampledSignal sb = Signal(b).sample_on(grid);
    return std::sqrt(grid.step()) * (sa.values - sb.values).norm();
}

GroupElement random_element(std::mt19937_64& rng, double box, double r_lo, double r_hi) {
    std::uniform_real_distribution<double> c(-box, box);
    std::uniform_real_distribution<double> r(r_lo, r_hi);
    const double s = c(rng), x = c(rng), y = c(rng), b = c(rng);
    return GroupElement(s, x, y, b, r(rng));
}

const RepresentationContext ctx{PlanckConstant(1.0)};

} // namespace

TEST_CASE("action of the individual coordinates") {
    const PolyGaussChirp f = hermite(2, ctx.hbar);
    const double us[] = {-1.1, 0.0, 0.4, 1.7};

    // Central s: a global phase.
    const PolyGaussChirp fs = schrodinger_apply(GroupElement(0.7, 0, 0, 0, 1), f, ctx);
    for (const double u : us) {
        CHECK(std::abs(fs.evaluate(u) - std::polar(1.0, 2.0 * kPi * 0.7) * f.evaluate(u)) < 1e-12);
    }
    // x: modulation.
    const PolyGaussChirp fx = schrodinger_apply(GroupElement(0, 0.6, 0, 0, 1), f, ctx);
    for (const double u : us) {
        CHECK(std::abs(fx.evaluate(u) - std::polar(1.0, 2.0 * kPi * 0.6 * u) * f.evaluate(u)) <
              1e-12);
    }
    // y: translation.
    const PolyGaussChirp fy = schrodinger_apply(GroupElement(0, 0, 0.9, 0, 1), f, ctx);
    for (const double u : us) CHECK(std::abs(fy.evaluate(u) - f.evaluate(u - 0.9)) < 1e-12);
    // b: chirp multiplier.
    const PolyGaussChirp fb = schrodinger_apply(GroupElement(0, 0, 0, 0.8, 1), f, ctx);
    for (const double u : us) {
        CHECK(std::abs(fb.evaluate(u) - std::polar(1.0, -kPi * 0.8 * u * u) * f.evaluate(u)) <
              1e-12);
    }
    // r: unitary dilation.
    const PolyGaussChirp fr = schrodinger_apply(GroupElement(0, 0, 0, 0, 2.0), f, ctx);
    for (const double u : us) {
        CHECK(std::abs(fr.evaluate(u) - std::numbers::sqrt2 * f.evaluate(2.0 * u)) < 1e-12);
    }
}

TEST_CASE("dilation rescales the gaussian envelope") {
    const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
    const PolyGaussChirp dil = schrodinger_apply(GroupElement(0, 0, 0, 0, 2.0), g, ctx);
    CHECK(std::abs(dil.alpha() - Complex(4.0, 0.0)) < 1e-14);
    CHECK(std::abs(dil.poly()[0] - Complex(std::numbers::sqrt2 * std::pow(2.0, 0.25), 0.0)) <
          1e-14);
}

TEST_CASE("representation is a homomorphism on the exact family") {
    const PolyGaussChirp f = hermite(1, ctx.hbar);
    const GroupElement g1(0, 1, 0, 0, 1), g2(0, 0, 1, 0, 1);
    CHECK(sampled_distance(schrodinger_apply(g1, schrodinger_apply(g2, f, ctx), ctx),
                           schrodinger_apply(multiply(g1, g2), f, ctx)) < 1e-12);

    std::mt19937_64 rng(41);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const GroupElement a = random_element(rng, 1.0, 0.5, 2.0);
        const GroupElement b = random_element(rng, 1.0, 0.5, 2.0);
        worst = std::max(worst,
                         sampled_distance(schrodinger_apply(a, schrodinger_apply(b, f, ctx), ctx),
                                          schrodinger_apply(multiply(a, b), f, ctx)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("representation is unitary") {
    std::mt19937_64 rng(42);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
        worst = std::max(worst,
                         std::abs(norm(schrodinger_apply(g, hermite(k % 5, ctx.hbar), ctx)) - 1.0));
    }
    // Roundoff in the degree-8 moment recurrence dominates here.
    CHECK(worst < 1e-8);
}

TEST_CASE("sampled action matches the exact action") {
    const PolyGaussChirp f = hermite(2, ctx.hbar);
    const SampledSignal fs = Signal(f).sample_on(default_grid());
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::uniform_real_distribution<double> rd(0.8, 1.25);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const GroupElement g(c(rng), c(rng), c(rng), c(rng), rd(rng));
        const SampledSignal viaExact = Signal(schrodinger_apply(g, f, ctx)).sample_on(fs.grid);
        const SampledSignal viaGrid = schrodinger_apply_sampled(g, fs, ctx);
        worst = std::max(worst, (viaExact.values - viaGrid.values).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("sampled action rejects translations that leave the window") {
    const SampledSignal fs = Signal(hermite(2, ctx.hbar)).sample_on(default_grid());
    CHECK_THROWS_AS(schrodinger_apply_sampled(GroupElement(0, 0, 100.0, 0, 1), fs, ctx),
                    WindowOverflowError);
}

TEST_CASE("derived action term by term") {
    const PolyGaussChirp f = hermite(2, ctx.hbar);
    const double h = ctx.h();

    const PolyGaussChirp viaS = derived_rep_apply(AlgebraVector::unit(Basis::S), f, ctx);
    CHECK(chirp_distance(viaS, f.scaled(2.0 * kPi * h * kI)) < 1e-13);

    const PolyGaussChirp viaX = derived_rep_apply(AlgebraVector::unit(Basis::X), f, ctx);
    CHECK(chirp_distance(viaX, f.times_linear(Complex(0, 0), 2.0 * kPi * h * kI)) < 1e-13);

    const PolyGaussChirp viaY = derived_rep_apply(AlgebraVector::unit(Basis::Y), f, ctx);
    CHECK(chirp_distance(viaY, f.derivative().scaled(Complex(-1.0, 0.0))) < 1e-13);

    const PolyGaussChirp viaB = derived_rep_apply(AlgebraVector::unit(Basis::B), f, ctx);
    const PolyGaussChirp u2f = f.times_linear(Complex(0, 0), Complex(1, 0))
                                   .times_linear(Complex(0, 0), Complex(1, 0));
    CHECK(chirp_distance(viaB, u2f.scaled(-kPi * h * kI)) < 1e-13);

    const PolyGaussChirp viaR = derived_rep_apply(AlgebraVector::unit(Basis::R), f, ctx);
    const PolyGaussChirp half_plus_udu = add(
        f.scaled(Complex(0.5, 0.0)), f.derivative().times_linear(Complex(0, 0), Complex(1, 0)));
    CHECK(chirp_distance(viaR, half_plus_udu) < 1e-13);
}

TEST_CASE("derived action closes the commutator table") {
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
            const double coeff =
                diff.poly().size() == 0 ? 0.0 : diff.poly().cwiseAbs().maxCoeff();
            worst = std::max(worst, coeff);
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("second-order identities vanish") {
    auto apply = [&](Basis v, const PolyGaussChirp& f) {
        return derived_rep_apply(AlgebraVector::unit(v), f, ctx);
    };
    double worst = 0.0;
    for (int n = 0; n <= 6; ++n) {
        const PolyGaussChirp f = hermite(n, ctx.hbar);
        const PolyGaussChirp xx = apply(Basis::X, apply(Basis::X, f));
        const PolyGaussChirp sb = apply(Basis::S, apply(Basis::B, f));
        worst = std::max(worst, norm(add(xx, sb.scaled(Complex(2.0, 0.0)))) / norm(xx));

        const PolyGaussChirp xy = apply(Basis::X, apply(Basis::Y, f));
        const PolyGaussChirp yx = apply(Basis::Y, apply(Basis::X, f));
        const PolyGaussChirp sr = apply(Basis::S, apply(Basis::R, f));
        worst = std::max(worst,
                         norm(add(add(xy, yx), sr.scaled(Complex(2.0, 0.0)))) / norm(xy));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("gaussian annihilators") {
    const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
    AlgebraCombo lowering;
    lowering[Basis::X] = Complex(-1.0, 0.0);
    lowering[Basis::Y] = Complex(0.0, 1.0);
    CHECK(norm(derived_rep_apply(lowering, g, ctx)) < 1e-14);

    AlgebraCombo affine;
    affine[Basis::S] = kI / (4.0 * kPi * ctx.h());
    affine[Basis::B] = 2.0 * kI;
    affine[Basis::R] = Complex(1.0, 0.0);
    CHECK(norm(derived_rep_apply(affine, g, ctx)) < 1e-14);
}

TEST_CASE("numeric derived action converges to the table") {
    const PolyGaussChirp g = gaussian_chirp(ctx.hbar);
    const UniformGrid1D grid = default_grid();
    auto err_for = [&](Basis v, double t) {
        const SampledSignal num = derived_rep_numeric(v, g, t, ctx, grid);
        const SampledSignal ref =
            Signal(derived_rep_apply(AlgebraVector::unit(v), g, ctx)).sample_on(grid);
        return (num.values - ref.values).cwiseAbs().maxCoeff();
    };
    CHECK(err_for(Basis::S, 1e-4) < 1e-6);
    CHECK(err_for(Basis::R, 1e-4) < 1e-6);
    const double ratio = err_for(Basis::R, 2e-4) / err_for(Basis::R, 1e-4);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("quasi-regular action at a point") {
    const FieldEvaluator F = [](double x, double y, double b, double r) {
        return std::exp(Complex(-0.1 * (x * x + y * y) - 0.05 * (r - 1.0) * (r - 1.0) -
                                    0.02 * b * b,
                                0.3 * x - 0.7 * y + 0.2 * b + 0.1 * r));
    };
    const Point4 p{0.7, -0.4, 0.3, 1.2};
    CHECK(std::abs(quasi_regular_point(GroupElement::identity(), F, p, ctx) -
                   F(p.x, p.y, p.b, p.r)) < 1e-15);

    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> xy(-2.0, 2.0), bb(-1.0, 1.0), rr(0.5, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const GroupElement g = random_element(rng, 1.0, 0.5, 2.0);
        const Point4 q{xy(rng), xy(rng), bb(rng), rr(rng)};
        const double dy = q.y - g.y();
        const Complex direct =
            std::polar(1.0, 2.0 * kPi * (g.s() + g.x() * dy - 0.5 * g.b() * dy * dy)) *
            F((q.x - g.x() + g.b() * dy) / g.r(), g.r() * dy, (q.b - g.b()) / (g.r() * g.r()),
              q.r / g.r());
        worst = std::max(worst, std::abs(quasi_regular_point(g, F, q, ctx) - direct));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("invariant derivatives match the table") {
    const LieSteps steps;
    const Point4 p{0.4, -0.3, 0.2, 1.1};

    const FieldEvaluator F = [](double x, double y, double b, double r) {
        return Complex(x * y + 0.5 * b * y * y + x * x, 0.3 * x - 0.1 * y * r);
    };
    CHECK(std::abs(lie_derivative_apply(Basis::S, F, p, steps, ctx) -
                   (-2.0 * kPi * kI) * F(p.x, p.y, p.b, p.r)) < 1e-12);

    const FieldEvaluator Fb = [](double, double, double b, double) { return Complex(b, 0.0); };
    CHECK(std::abs(lie_derivative_apply(Basis::B, Fb, p, steps, ctx) - p.r * p.r) < 1e-9);

    const FieldEvaluator Fr = [](double, double, double, double r) { return Complex(r, 0.0); };
    CHECK(std::abs(lie_derivative_apply(Basis::R, Fr, p, steps, ctx) - p.r) < 1e-9);

    const FieldEvaluator Fx = [](double x, double, double, double) { return Complex(x, 0.0); };
    CHECK(std::abs(lie_derivative_apply(Basis::X, Fx, p, steps, ctx) - p.r) < 1e-9);
}

TEST_CASE("invariant derivatives realize the bracket") {
    const LieSteps steps;
    const Point4 p{0.4, -0.3, 0.2, 1.1};
    const FieldEvaluator F = [](double x, double y, double b, double r) {
        return Complex(x * y + 0.5 * b * y * y + x * x + 0.1 * r * r, 0.0);
    };
    const FieldEvaluator LB = [&](double x, double y, double b, double r) {
        return lie_derivative_apply(Basis::B, F, Point4{x, y, b, r}, steps, ctx);
    };
    const FieldEvaluator LY = [&](double x, double y, double b, double r) {
        return lie_derivative_apply(Basis::Y, F, Point4{x, y, b, r}, steps, ctx);
    };
    const Complex comm = lie_derivative_apply(Basis::Y, LB, p, steps, ctx) -
                         lie_derivative_apply(Basis::B, LY, p, steps, ctx);
    const Complex direct = lie_derivative_apply(Basis::X, F, p, steps, ctx);
    CHECK(std::abs(comm - direct) < 1e-6);
}
