#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ssr/grid.hpp"
#include "ssr/signals.hpp"

namespace ssr {

struct Point4 {
    double x;
    double y;
    double b;
    double r;
};

// One (b, r) slice of a transform: values(i, j) holds the value at
// (x_grid.point(i), y_grid.point(j)).  Columns are x-profiles so the x axis
// is contiguous in memory.
class ComplexField2D {
public:
    ComplexField2D(UniformGrid1D x_grid, UniformGrid1D y_grid, Eigen::MatrixXcd values, double b,
                   double r, double hbar);

    const UniformGrid1D& x_grid() const { return x_grid_; }
    const UniformGrid1D& y_grid() const { return y_grid_; }
    const Eigen::MatrixXcd& values() const { return values_; }
    double b() const { return b_; }
    double r() const { return r_; }
    double hbar() const { return hbar_; }

    ComplexField2D with_values(Eigen::MatrixXcd v) const;

private:
    UniformGrid1D x_grid_;
    UniformGrid1D y_grid_;
    Eigen::MatrixXcd values_;
    double b_, r_, hbar_;
};

// Weight attached to one slice when integrating over (x, y).
// Default: hbar dx dy, which makes the fast transform an exact isometry.
// Scaled: hbar dx dy / sqrt(2 r), which removes the r dependence of the
// slice volume.
enum class SliceWeight { Default, Scaled };

double slice_weight_factor(SliceWeight w, double r, double hbar);

// Measure over the (b, r) parameters: a point mass at one slice or a finite
// weighted set of slices (weights positive, summing to one).
class MeasureSpec {
public:
    struct Atom {
        double b;
        double r;
        double weight;
    };

    static MeasureSpec dirac(double b, double r, SliceWeight w = SliceWeight::Default);
    static MeasureSpec discrete(std::vector<Atom> atoms, SliceWeight w = SliceWeight::Default);

    bool is_dirac() const { return atoms_.size() == 1; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    SliceWeight weight() const { return weight_; }

private:
    MeasureSpec(std::vector<Atom> atoms, SliceWeight w);

    std::vector<Atom> atoms_;
    SliceWeight weight_;
};

// L2 pairing of two single-slice fields under the measure.  The measure must
// be concentrated on the common slice of F and G.
Complex slice_inner_product(const ComplexField2D& f, const ComplexField2D& g,
                            const MeasureSpec& measure);

// Multi-slice pairing: every atom of the measure must match one slice in each
// span (same (b, r) within 1e-9).
Complex slice_inner_product(std::span<const ComplexField2D> f, std::span<const ComplexField2D> g,
                            const MeasureSpec& measure);

double slice_norm(const ComplexField2D& f, SliceWeight w = SliceWeight::Default);

// Find the slice with the given parameters; throws if absent.
const ComplexField2D& find_slice(std::span<const ComplexField2D> fields, double b, double r);

// Central finite-difference stencil around (b0, r0): the center slice plus
// the four neighbours displaced by +-h_b in b and +-h_r in r.  All five share
// grids and hbar.
class SliceStack {
public:
    SliceStack(ComplexField2D center, ComplexField2D b_plus, ComplexField2D b_minus,
               ComplexField2D r_plus, ComplexField2D r_minus);

    const ComplexField2D& center() const { return center_; }
    const ComplexField2D& b_plus() const { return b_plus_; }
    const ComplexField2D& b_minus() const { return b_minus_; }
    const ComplexField2D& r_plus() const { return r_plus_; }
    const ComplexField2D& r_minus() const { return r_minus_; }

    double h_b() const { return h_b_; }
    double h_r() const { return h_r_; }

private:
    ComplexField2D center_, b_plus_, b_minus_, r_plus_, r_minus_;
    double h_b_, h_r_;
};

} // namespace ssr
