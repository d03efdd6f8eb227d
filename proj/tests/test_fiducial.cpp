#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "ssr/fiducial.hpp"

using namespace ssr;

namespace {

constexpr double kPi = std::numbers::pi;
const RepresentationContext ctx{PlanckConstant(1.0)};

std::string thrown_message(const FiducialSpec& spec) {
    try {
        build_fiducial(spec, ctx);
    } catch (const InvalidSpecError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("gaussian fiducial has unit norm and matches the signal family") {
    const PolyGaussChirp g = gaussian(ctx);
    CHECK(std::abs(norm(g) - 1.0) < 1e-12);
    const PolyGaussChirp ref = gaussian_chirp(ctx.hbar);
    for (const double u : {-2.0, -0.3, 0.0, 1.1}) {
        CHECK(std::abs(g.evaluate(u) - ref.evaluate(u)) < 1e-14);
    }
}

TEST_CASE("cubic branch reduces to the gaussian") {
    const UniformGrid1D grid = fiducial_default_grid();
    const SampledSignal a = airy_type(FiducialSpec{0.0, -1.0, 1.0, 0.0, 0.0}, ctx);
    const Eigen::VectorXcd ref = Signal(gaussian(ctx)).sample_on(grid).values;
    CHECK((a.values - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("power branch reduces to the gaussian") {
    const UniformGrid1D grid = fiducial_default_grid();
    const SampledSignal a = generic_type(FiducialSpec{1.0 / (4.0 * kPi), 0.0, 0.0, 2.0, 1.0}, ctx);
    const Eigen::VectorXcd ref = Signal(gaussian(ctx)).sample_on(grid).values;
    CHECK((a.values - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("cubic term only changes the phase") {
    const SampledSignal a = airy_type(FiducialSpec{0.0, -1.0, 1.0, 1.0, 0.0}, ctx);
    const SampledSignal b = airy_type(FiducialSpec{0.0, -1.0, 1.0, 0.0, 0.0}, ctx);
    CHECK((a.values.cwiseAbs() - b.values.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("constructed fiducials are certified by their own spec") {
    const FiducialSpec specs[] = {
        {0.0, -1.0, 1.0, 0.0, 0.0},
        {0.0, -1.0, 1.0, 1.0, 0.0},
        {0.0, -0.5, 1.0, 0.7, 0.0},
        {1.0 / (4.0 * kPi), 0.0, 0.0, 2.0, 1.0},
        {0.1, 0.3, 0.5, 2.0, 1.0},
        {0.0, 0.0, 1.0, 1.0, 0.5},
        // E_s = 3/(4 pi) puts the branch exponent at exactly 1, so the
        // prefactor stays smooth across u = 0 and the spectral residual
        // is meaningful.  Fractional exponents with E_y = 0 kink there.
        {3.0 / (4.0 * kPi), 0.0, 0.0, 1.0, 1.0},
    };
    for (const FiducialSpec& spec : specs) {
        CAPTURE(spec.e_s);
        CAPTURE(spec.e_b);
        CAPTURE(spec.e_r);
        const Signal f = build_fiducial(spec, ctx);
        CHECK(std::abs(f.norm() - 1.0) < 1e-10);
        CHECK(annihilation_residual(spec, f, ctx) < 1e-7);
    }
}

TEST_CASE("dispatch picks the branch by E_r") {
    const FiducialSpec cubic{0.0, -1.0, 1.0, 0.4, 0.0};
    const Signal via_dispatch = build_fiducial(cubic, ctx);
    const SampledSignal direct = airy_type(cubic, ctx);
    CHECK((via_dispatch.samples().values - direct.values).cwiseAbs().maxCoeff() == 0.0);

    const FiducialSpec power{0.1, 0.3, 0.5, 2.0, 1.0};
    const Signal via_dispatch2 = build_fiducial(power, ctx);
    const SampledSignal direct2 = generic_type(power, ctx);
    CHECK((via_dispatch2.samples().values - direct2.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exact gaussian passes its own annihilation test") {
    const FiducialSpec spec{0.0, -1.0, 1.0, 0.0, 0.0};
    CHECK(annihilation_residual(spec, Signal(gaussian(ctx)), ctx) < 1e-10);
}

TEST_CASE("first excited state fails the gaussian spec") {
    const FiducialSpec spec{0.0, -1.0, 1.0, 0.0, 0.0};
    CHECK(annihilation_residual(spec, Signal(hermite(1, ctx.hbar)), ctx) > 0.1);
}

TEST_CASE("spec validation names the violated condition") {
    CHECK(thrown_message(FiducialSpec{0.0, 0.0, 0.0, 0.0, 0.0}).find("at least one") !=
          std::string::npos);
    CHECK(thrown_message(FiducialSpec{0.3, 0.0, 0.0, 0.0, 0.0}).find("E_y") !=
          std::string::npos);
    CHECK(thrown_message(FiducialSpec{0.0, 0.5, 1.0, 0.0, 0.0}).find("square integrability") !=
          std::string::npos);
    CHECK(thrown_message(FiducialSpec{0.0, 0.0, 1.0, -2.0, 1.0}).find("E_b/E_r > 0") !=
          std::string::npos);
    CHECK(thrown_message(FiducialSpec{0.0, 0.0, 0.0, 2.0, 1.0}).find("kappa") !=
          std::string::npos);
}

TEST_CASE("singular-origin rule accepts a nonnegative branch exponent") {
    // kappa = -1/2 + 2 pi hbar E_s / E_r; E_s = 0.1 makes it positive.
    const FiducialSpec ok{0.1, 0.0, 0.0, 1.0, 1.0};
    const Signal f = build_fiducial(ok, ctx);
    CHECK(std::abs(f.norm() - 1.0) < 1e-10);
    // E_s = 0 pushes kappa to -1/2: rejected.
    CHECK(!thrown_message(FiducialSpec{0.0, 0.0, 0.0, 1.0, 1.0}).empty());
}
