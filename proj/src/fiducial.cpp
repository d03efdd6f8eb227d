#include "ssr/fiducial.hpp"

#include <cmath>
#include <numbers>

#include "ssr/fourier.hpp"

namespace ssr {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// The sign of the E_y term is forced by substituting the solution back into
// the annihilation operator: the constant terms cancel only with a plus here.
double branch_exponent(const FiducialSpec& s, double h) {
    const double er3 = s.e_r * s.e_r * s.e_r;
    return -0.5 + 2.0 * kPi * h * s.e_s / s.e_r +
           kPi * h * s.e_y * (2.0 * s.e_x * s.e_r + s.e_b * s.e_y) / er3;
}

// (base)^kappa, principal branch, with the base == 0 samples pinned down.
Complex branch_power(Complex base, double kappa) {
    if (std::abs(kappa) < 1e-12) return {1.0, 0.0};
    if (base == Complex(0.0, 0.0)) {
        if (kappa > 0.0) return {0.0, 0.0};
        throw InvalidSpecError("branch_power: negative exponent at a vanishing base");
    }
    return std::pow(base, kappa);
}

SampledSignal normalized(const UniformGrid1D& grid, Eigen::VectorXcd values) {
    SampledSignal out(grid, std::move(values));
    const double n = out.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidSpecError("fiducial: samples do not normalize on this grid");
    }
    out.values /= n;
    return out;
}

} // namespace

void validate_fiducial(const FiducialSpec& spec, const PlanckConstant& hbar) {
    const double h = hbar.value();
    if (spec.e_s == 0.0 && spec.e_x == 0.0 && spec.e_y == 0.0 && spec.e_b == 0.0 &&
        spec.e_r == 0.0) {
        throw InvalidSpecError("fiducial spec: at least one coefficient must be nonzero");
    }
    if (spec.e_r == 0.0) {
        if (spec.e_y == 0.0) {
            throw InvalidSpecError("fiducial spec: E_r = 0 requires E_y != 0");
        }
        if (!(spec.e_x / spec.e_y < 0.0)) {
            throw InvalidSpecError(
                "fiducial spec: requires E_x < 0 for square integrability (E_x/E_y < 0)");
        }
    } else {
        if (!(h * spec.e_b / spec.e_r > 0.0)) {
            throw InvalidSpecError("fiducial spec: we need hbar*E_b/E_r > 0");
        }
        if (spec.e_y == 0.0 && branch_exponent(spec, h) < -1e-12) {
            throw InvalidSpecError(
                "fiducial spec: E_y = 0 requires Re(kappa) >= 0, otherwise the prefactor is "
                "singular at u = 0 and not square integrable");
        }
    }
}

UniformGrid1D fiducial_default_grid() { return UniformGrid1D::centered(12.0, 1024); }

PolyGaussChirp gaussian(const RepresentationContext& ctx) { return gaussian_chirp(ctx.hbar); }

SampledSignal airy_type(const FiducialSpec& spec, const RepresentationContext& ctx,
                        const UniformGrid1D& grid) {
    validate_fiducial(spec, ctx.hbar);
    if (spec.e_r != 0.0) {
        throw InvalidSpecError("airy_type: requires E_r = 0");
    }
    const double h = ctx.h();
    Eigen::VectorXcd values(grid.count());
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        const double u = grid.point(j);
        const Complex expo = kPi * h *
                             (2.0 * kI * (spec.e_s / spec.e_y) * u +
                              (spec.e_x / spec.e_y) * u * u -
                              kI * (spec.e_b / (3.0 * spec.e_y)) * u * u * u);
        values[j] = std::exp(expo);
    }
    return normalized(grid, std::move(values));
}

SampledSignal generic_type(const FiducialSpec& spec, const RepresentationContext& ctx,
                           const UniformGrid1D& grid) {
    validate_fiducial(spec, ctx.hbar);
    if (spec.e_r == 0.0) {
        throw InvalidSpecError("generic_type: requires E_r != 0");
    }
    const double h = ctx.h();
    const double kappa = branch_exponent(spec, h);
    const double er = spec.e_r;
    const double lin = (2.0 * spec.e_x * er + spec.e_b * spec.e_y) / (er * er);
    Eigen::VectorXcd values(grid.count());
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        const double u = grid.point(j);
        const Complex base = er * u - kI * spec.e_y;
        const Complex expo = -kPi * h * (kI * lin * u + (spec.e_b / (2.0 * er)) * u * u);
        values[j] = branch_power(base, kappa) * std::exp(expo);
    }
    return normalized(grid, std::move(values));
}

Signal build_fiducial(const FiducialSpec& spec, const RepresentationContext& ctx,
                      const UniformGrid1D& grid) {
    validate_fiducial(spec, ctx.hbar);
    if (spec.e_r == 0.0) return Signal(airy_type(spec, ctx, grid));
    return Signal(generic_type(spec, ctx, grid));
}

double annihilation_residual(const FiducialSpec& spec, const Signal& f,
                             const RepresentationContext& ctx, const UniformGrid1D& grid) {
    const double h = ctx.h();
    const SampledSignal s = f.sample_on(grid);
    const double n = s.norm();
    if (n == 0.0) return 0.0;
    const Eigen::VectorXcd df = spectral_derivative(s.values, grid);
    Eigen::VectorXcd out(grid.count());
    for (Eigen::Index j = 0; j < grid.count(); ++j) {
        const double u = grid.point(j);
        const Complex first = (spec.e_r * u - kI * spec.e_y) * df[j];
        const Complex zero =
            (kPi * h * (spec.e_b * u * u + 2.0 * kI * spec.e_x * u - 2.0 * spec.e_s) +
             0.5 * spec.e_r) *
            s.values[j];
        out[j] = first + zero;
    }
    return SampledSignal(grid, std::move(out)).norm() / n;
}

} // namespace ssr
