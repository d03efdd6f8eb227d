#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ssr/field.hpp"
#include "ssr/representations.hpp"

namespace ssr {

// A transform slice together with a short description of the fiducial that
// produced it (carried into run metadata).
struct TransformResult {
    ComplexField2D field;
    std::string fiducial;
};

std::string describe_signal(const Signal& s);

// W_phi f(x, y, b, r) = <f, rho(0,x,y,b,r) phi>, evaluated one point at a
// time by the rectangle rule on the signal window.
Complex covariant_point(const Signal& f, const Signal& phi, const Point4& p,
                        const RepresentationContext& ctx);

// Full slice by per-point quadrature (one running phase per output row keeps
// it O(N^3) overall).  Grids are the caller's choice; this is the slow
// reference route, independent of the FFT pipeline.
TransformResult covariant_direct(const Signal& f, const Signal& phi, const UniformGrid1D& x_grid,
                                 const UniformGrid1D& y_grid, double b, double r,
                                 const RepresentationContext& ctx);

// Same slice through the factorization: dilation, coordinate shear, chirp
// multiplier, partial Fourier transform (zero-padded to twice the window),
// final modulation, then a central crop of the x axis.  The y grid is the
// signal grid; the x grid is its cropped Fourier dual.  When r < 0.25 the
// window is widened first so the slice keeps its mass inside the grid.
TransformResult covariant_fast(const Signal& f, const Signal& phi, double b, double r,
                               const RepresentationContext& ctx);

// Covariant transform with the normalized Gaussian fiducial.
TransformResult metamorphism(const Signal& f, double b, double r,
                             const RepresentationContext& ctx);

// Grid-honouring variant: uses the fast route when the requested grids match
// its natural output, otherwise falls back to direct quadrature.
TransformResult metamorphism(const Signal& f, const UniformGrid1D& x_grid,
                             const UniformGrid1D& y_grid, double b, double r,
                             const RepresentationContext& ctx);

// Adjoint transform: integrates rho(0,x,y,b,r) phi against the field over
// (x, y) and the given measure over (b, r).  Every measure atom must match a
// supplied slice.  Output samples live on the field's y grid, which must be
// dual to its x grid.
SampledSignal contravariant(std::span<const ComplexField2D> fields, const Signal& phi,
                            const MeasureSpec& measure, const RepresentationContext& ctx);
SampledSignal contravariant(const ComplexField2D& field, const Signal& phi,
                            const RepresentationContext& ctx);

// max_p | W_phi(rho(g) f)(p) - [quasi-regular g action on W_phi f](p) |.
double intertwining_residual(const GroupElement& g, const Signal& f, const Signal& phi,
                             std::span<const Point4> points, const RepresentationContext& ctx);

// | <W_phi f, W_psi g>_mu - <f, g> <psi, phi> |.
double orthogonality_defect(const Signal& f, const Signal& g, const Signal& phi, const Signal& psi,
                            const MeasureSpec& measure, const RepresentationContext& ctx);

// Relative residuals of the two operators that cut out the image space.
// c1 is spectral on the center slice; c2 differentiates across the stack.
struct CauchyRiemannResiduals {
    double c1;
    double c2;
};
CauchyRiemannResiduals cauchy_riemann_residuals(const SliceStack& stack);

// Second-order structure operators; s1 is the parabolic-type one, s2 the
// symmetrized mixed one.
struct StructuralResiduals {
    double s1;
    double s2;
};
StructuralResiduals structural_residuals(const SliceStack& stack);

using SliceProvider = std::function<ComplexField2D(double b, double r)>;

SliceStack make_slice_stack(const SliceProvider& provider, double b0, double r0, double h_b,
                            double h_r);
SliceStack metamorphism_stack(const Signal& f, double b0, double r0, double h_b, double h_r,
                              const RepresentationContext& ctx);

// Complex coordinates of a slice: w = b + i r^2 (upper half plane), z = x + w y.
Complex chart_w(double b, double r);
Complex chart_z(double x, double y, double b, double r);

// Chart data: the slice rewritten as f2(z, w) = F e^{pi i hbar x^2 / w} / sqrt(r).
// The chart factor grows like exp(pi hbar r^2 x^2 / |w|^2), so f2 is stored
// for inspection while residual work stays on the F side where the values
// are tame.  b-neighbour slices are kept when built from a stack.
struct ComplexChart {
    UniformGrid1D x_grid;
    UniformGrid1D y_grid;
    double b0, r0, h_b, hbar;
    Eigen::MatrixXcd z_values;  // z over the center slice
    Eigen::MatrixXcd f2_center;
    Eigen::MatrixXcd f_center;  // original slice values
    std::optional<Eigen::MatrixXcd> f_b_plus, f_b_minus;

    Complex w() const { return chart_w(b0, r0); }
};

ComplexChart to_complex_chart(const SliceStack& stack);
ComplexChart to_complex_chart(const ComplexField2D& field);

// Residual of 4 pi i hbar w df/dw - w d^2f/dz^2 + 4 pi i hbar z df/dz
// + 2 pi i hbar f on the chart, relative to the field, measured in the norm
// the chart inherits from the slice (the chart factor cancels there).
// Requires b-neighbour slices.
double parabolic_residual(const ComplexChart& chart);

struct CharacterizeTolerances {
    double c1 = 1e-6;
    double c2 = 1e-4;
    double s1 = 1e-4;
    double roundtrip = 1e-5;
};

struct CharacterizationResult {
    bool accepted = false;
    std::string reason;           // names the first violated condition
    double c1 = 0.0, c2 = 0.0, s1 = 0.0, roundtrip = 0.0;
    std::optional<SampledSignal> recovered;
};

// Decides whether the provided family of slices is the transform of some
// signal with fiducial phi: residual conditions on a stencil around
// (b0, r0), then reconstruct-and-retransform on the reference slice.
CharacterizationResult characterize(const SliceProvider& provider, const Signal& phi,
                                    const CharacterizeTolerances& tol,
                                    const RepresentationContext& ctx, double b0 = 0.0,
                                    double r0 = 1.0, double h_b = 1e-3, double h_r = 1e-3);

} // namespace ssr
