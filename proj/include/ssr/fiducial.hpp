#pragma once

#include "ssr/representations.hpp"
#include "ssr/signals.hpp"

namespace ssr {

// Coefficients (E_s, E_x, E_y, E_b, E_r) of the algebra direction whose
// derived action the fiducial must annihilate.
struct FiducialSpec {
    double e_s = 0.0;
    double e_x = 0.0;
    double e_y = 0.0;
    double e_b = 0.0;
    double e_r = 0.0;
};

// Throws InvalidSpecError naming the violated condition:
//  - some coefficient must be nonzero;
//  - E_r == 0 requires E_y != 0 and E_x/E_y < 0 (square integrability);
//  - E_r != 0 requires hbar*E_b/E_r > 0, and with E_y == 0 additionally
//    Re(kappa) >= 0 where kappa is the branch exponent at the root of the
//    prefactor.
void validate_fiducial(const FiducialSpec& spec, const PlanckConstant& hbar);

UniformGrid1D fiducial_default_grid(); // [-12, 12), 1024 points

// Vacuum of the lowering direction (-X + iY): the normalized Gaussian.
PolyGaussChirp gaussian(const RepresentationContext& ctx);

// Heisenberg-type branch (E_r == 0): cubic-phase solution, unit-normalized
// on the grid.
SampledSignal airy_type(const FiducialSpec& spec, const RepresentationContext& ctx,
                        const UniformGrid1D& grid = fiducial_default_grid());

// Affine-type branch (E_r != 0): branch-power times Gaussian chirp,
// unit-normalized on the grid.  Principal branch throughout.
SampledSignal generic_type(const FiducialSpec& spec, const RepresentationContext& ctx,
                           const UniformGrid1D& grid = fiducial_default_grid());

// Dispatch on E_r.
Signal build_fiducial(const FiducialSpec& spec, const RepresentationContext& ctx,
                      const UniformGrid1D& grid = fiducial_default_grid());

// || A f || / || f || where A is the first-order annihilation operator built
// from the coefficients; derivative taken spectrally on the grid.
double annihilation_residual(const FiducialSpec& spec, const Signal& f,
                             const RepresentationContext& ctx,
                             const UniformGrid1D& grid = fiducial_default_grid());

} // namespace ssr
