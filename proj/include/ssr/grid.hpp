#pragma once

#include <Eigen/Dense>

#include "ssr/errors.hpp"

namespace ssr {

// Uniform grid u_j = start + j*step, j = 0..count-1.  step > 0, count > 0.
class UniformGrid1D {
public:
    UniformGrid1D(double start, double step, Eigen::Index count);

    // Symmetric window [-half_width, half_width) with the given sample count;
    // contains 0 when count is even.
    static UniformGrid1D centered(double half_width, Eigen::Index count);

    double start() const { return start_; }
    double step() const { return step_; }
    Eigen::Index count() const { return count_; }

    double point(Eigen::Index j) const { return start_ + static_cast<double>(j) * step_; }
    double back() const { return point(count_ - 1); }
    double length() const { return step_ * static_cast<double>(count_); }

    Eigen::ArrayXd points() const;

    // Index of the nearest grid point; no range clamp.
    Eigen::Index nearest_index(double u) const;

    bool same_as(const UniformGrid1D& other, double tol = 1e-12) const;

private:
    double start_;
    double step_;
    Eigen::Index count_;
};

// Default sampling window shared by the transforms: [-8, 8) with 512 points.
UniformGrid1D default_grid();

} // namespace ssr
