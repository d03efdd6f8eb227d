#pragma once

#include <functional>

#include "ssr/field.hpp"
#include "ssr/group.hpp"
#include "ssr/signals.hpp"

namespace ssr {

struct RepresentationContext {
    PlanckConstant hbar;
    double h() const { return hbar.value(); }
};

// Unitary action on L2(R):
//   [rho(g) f](u) = sqrt(r) exp(2 pi i hbar (s + x(u-y) - b(u-y)^2/2)) f(r(u-y)).
// The exact family is closed under this action.
PolyGaussChirp schrodinger_apply(const GroupElement& g, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx);

// Same action on grid samples.  The dilation and shift are evaluated through
// the trigonometric interpolant of f; if the moved support leaves the window
// this throws WindowOverflowError.
SampledSignal schrodinger_apply_sampled(const GroupElement& g, const SampledSignal& f,
                                        const RepresentationContext& ctx);

Signal schrodinger_apply(const GroupElement& g, const Signal& f, const RepresentationContext& ctx);

using FieldEvaluator = std::function<Complex(double x, double y, double b, double r)>;

// Action induced on functions over the group modulo its center, evaluated at
// one point.
Complex quasi_regular_point(const GroupElement& g, const FieldEvaluator& f, const Point4& p,
                            const RepresentationContext& ctx);

// Derived action of an algebra coefficient vector (complex coefficients
// allowed):
//   S -> 2 pi i hbar,  X -> 2 pi i hbar u,  Y -> -d/du,
//   B -> -pi i hbar u^2,  R -> 1/2 + u d/du.
PolyGaussChirp derived_rep_apply(const AlgebraCombo& a, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx);
PolyGaussChirp derived_rep_apply(const AlgebraVector& a, const PolyGaussChirp& f,
                                 const RepresentationContext& ctx);

// Central difference (rho(exp(t V)) f - rho(exp(-t V)) f) / (2 t) sampled on
// the grid; converges to derived_rep_apply at rate t^2.
SampledSignal derived_rep_numeric(Basis v, const PolyGaussChirp& f, double t_step,
                                  const RepresentationContext& ctx,
                                  const UniformGrid1D& grid = default_grid());

struct LieSteps {
    double dx = 1e-4;
    double dy = 1e-4;
    double db = 1e-3;
    double dr_rel = 1e-3; // step in r is dr_rel * r
};

// Right-invariant derivative of a function on the group quotient along a
// basis direction, by central finite differences:
//   X -> r d/dx                  B -> r^2 d/db
//   Y -> (1/r)(-2 pi i hbar x - b d/dx + d/dy)
//   R -> r d/dr                  S -> -2 pi i hbar.
Complex lie_derivative_apply(Basis v, const FieldEvaluator& f, const Point4& p,
                             const LieSteps& steps, const RepresentationContext& ctx);

} // namespace ssr
