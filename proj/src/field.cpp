#include "ssr/field.hpp"

#include <cmath>

#include "ssr/errors.hpp"

namespace ssr {

ComplexField2D::ComplexField2D(UniformGrid1D x_grid, UniformGrid1D y_grid, Eigen::MatrixXcd values,
                               double b, double r, double hbar)
    : x_grid_(x_grid), y_grid_(y_grid), values_(std::move(values)), b_(b), r_(r), hbar_(hbar) {
    if (values_.rows() != x_grid_.count() || values_.cols() != y_grid_.count()) {
        throw InvalidSpecError("ComplexField2D: value dimensions must match the grids");
    }
    if (!(r_ > 0.0)) {
        throw InvalidSpecError("ComplexField2D: r must be positive");
    }
    if (!(hbar_ > 0.0)) {
        throw InvalidSpecError("ComplexField2D: hbar must be positive");
    }
    if (!std::isfinite(b_)) {
        throw InvalidSpecError("ComplexField2D: b must be finite");
    }
}

ComplexField2D ComplexField2D::with_values(Eigen::MatrixXcd v) const {
    return ComplexField2D(x_grid_, y_grid_, std::move(v), b_, r_, hbar_);
}

double slice_weight_factor(SliceWeight w, double r, double hbar) {
    switch (w) {
    case SliceWeight::Default: return hbar;
    case SliceWeight::Scaled: return hbar / std::sqrt(2.0 * r);
    }
    throw InvalidSpecError("slice_weight_factor: unknown weight");
}

MeasureSpec::MeasureSpec(std::vector<Atom> atoms, SliceWeight w)
    : atoms_(std::move(atoms)), weight_(w) {
    if (atoms_.empty()) {
        throw InvalidSpecError("MeasureSpec: at least one atom required");
    }
    double total = 0.0;
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0)) {
            throw InvalidSpecError("MeasureSpec: atom weights must be positive");
        }
        if (!(a.r > 0.0)) {
            throw InvalidSpecError("MeasureSpec: atom r must be positive");
        }
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidSpecError("MeasureSpec: atom weights must sum to one");
    }
}

MeasureSpec MeasureSpec::dirac(double b, double r, SliceWeight w) {
    return MeasureSpec({Atom{b, r, 1.0}}, w);
}

MeasureSpec MeasureSpec::discrete(std::vector<Atom> atoms, SliceWeight w) {
    return MeasureSpec(std::move(atoms), w);
}

namespace {

bool same_slice(double b1, double r1, double b2, double r2) {
    const double tol = 1e-9;
    return std::abs(b1 - b2) <= tol * std::max(1.0, std::abs(b1)) &&
           std::abs(r1 - r2) <= tol * std::max(1.0, r1);
}

Complex one_slice_pairing(const ComplexField2D& f, const ComplexField2D& g, SliceWeight w) {
    if (!f.x_grid().same_as(g.x_grid()) || !f.y_grid().same_as(g.y_grid())) {
        throw GridMismatchError("slice_inner_product: fields live on different grids");
    }
    if (!same_slice(f.b(), f.r(), g.b(), g.r()) || f.hbar() != g.hbar()) {
        throw InvalidSpecError("slice_inner_product: fields belong to different slices");
    }
    const double area = f.x_grid().step() * f.y_grid().step();
    const Complex raw = (g.values().conjugate().cwiseProduct(f.values())).sum();
    return slice_weight_factor(w, f.r(), f.hbar()) * area * raw;
}

} // namespace

Complex slice_inner_product(const ComplexField2D& f, const ComplexField2D& g,
                            const MeasureSpec& measure) {
    Complex out{0.0, 0.0};
    for (const MeasureSpec::Atom& a : measure.atoms()) {
        if (!same_slice(a.b, a.r, f.b(), f.r())) {
            throw InvalidSpecError(
                "slice_inner_product: measure references a slice the fields do not carry");
        }
        out += a.weight * one_slice_pairing(f, g, measure.weight());
    }
    return out;
}

Complex slice_inner_product(std::span<const ComplexField2D> f, std::span<const ComplexField2D> g,
                            const MeasureSpec& measure) {
    Complex out{0.0, 0.0};
    for (const MeasureSpec::Atom& a : measure.atoms()) {
        const ComplexField2D& fs = find_slice(f, a.b, a.r);
        const ComplexField2D& gs = find_slice(g, a.b, a.r);
        out += a.weight * one_slice_pairing(fs, gs, measure.weight());
    }
    return out;
}

double slice_norm(const ComplexField2D& f, SliceWeight w) {
    const double area = f.x_grid().step() * f.y_grid().step();
    return std::sqrt(slice_weight_factor(w, f.r(), f.hbar()) * area) * f.values().norm();
}

const ComplexField2D& find_slice(std::span<const ComplexField2D> fields, double b, double r) {
    for (const ComplexField2D& f : fields) {
        if (same_slice(b, r, f.b(), f.r())) return f;
    }
    throw InvalidSpecError("find_slice: no field carries the requested (b, r) slice");
}

namespace {

void require_stack_compatible(const ComplexField2D& a, const ComplexField2D& c) {
    if (!a.x_grid().same_as(c.x_grid()) || !a.y_grid().same_as(c.y_grid())) {
        throw GridMismatchError("SliceStack: slices live on different grids");
    }
    if (a.hbar() != c.hbar()) {
        throw InvalidSpecError("SliceStack: slices carry different hbar");
    }
}

} // namespace

SliceStack::SliceStack(ComplexField2D center, ComplexField2D b_plus, ComplexField2D b_minus,
                       ComplexField2D r_plus, ComplexField2D r_minus)
    : center_(std::move(center)), b_plus_(std::move(b_plus)), b_minus_(std::move(b_minus)),
      r_plus_(std::move(r_plus)), r_minus_(std::move(r_minus)) {
    require_stack_compatible(b_plus_, center_);
    require_stack_compatible(b_minus_, center_);
    require_stack_compatible(r_plus_, center_);
    require_stack_compatible(r_minus_, center_);
    h_b_ = b_plus_.b() - center_.b();
    h_r_ = r_plus_.r() - center_.r();
    const double tol = 1e-12;
    if (!(h_b_ > 0.0) || std::abs((center_.b() - b_minus_.b()) - h_b_) > tol * std::max(1.0, h_b_)) {
        throw InvalidSpecError("SliceStack: b slices must straddle the center symmetrically");
    }
    if (!(h_r_ > 0.0) || std::abs((center_.r() - r_minus_.r()) - h_r_) > tol * std::max(1.0, h_r_)) {
        throw InvalidSpecError("SliceStack: r slices must straddle the center symmetrically");
    }
    if (b_plus_.r() != center_.r() || b_minus_.r() != center_.r() ||
        r_plus_.b() != center_.b() || r_minus_.b() != center_.b()) {
        throw InvalidSpecError("SliceStack: neighbour slices must vary one parameter at a time");
    }
}

} // namespace ssr
