#include "ssr/grid.hpp"

#include <cmath>

namespace ssr {

UniformGrid1D::UniformGrid1D(double start, double step, Eigen::Index count)
    : start_(start), step_(step), count_(count) {
    if (!(std::isfinite(start) && std::isfinite(step))) {
        throw InvalidSpecError("UniformGrid1D: start and step must be finite");
    }
    if (!(step > 0.0)) {
        throw InvalidSpecError("UniformGrid1D: step must be positive");
    }
    if (count <= 0) {
        throw InvalidSpecError("UniformGrid1D: count must be positive");
    }
}

UniformGrid1D UniformGrid1D::centered(double half_width, Eigen::Index count) {
    if (!(half_width > 0.0)) {
        throw InvalidSpecError("UniformGrid1D::centered: half_width must be positive");
    }
    const double step = 2.0 * half_width / static_cast<double>(count);
    return UniformGrid1D(-half_width, step, count);
}

Eigen::ArrayXd UniformGrid1D::points() const {
    return start_ + step_ * Eigen::ArrayXd::LinSpaced(count_, 0.0, static_cast<double>(count_ - 1));
}

Eigen::Index UniformGrid1D::nearest_index(double u) const {
    return static_cast<Eigen::Index>(std::lround((u - start_) / step_));
}

bool UniformGrid1D::same_as(const UniformGrid1D& other, double tol) const {
    const double scale = std::max(1.0, std::abs(start_) + length());
    return count_ == other.count_ && std::abs(start_ - other.start_) <= tol * scale &&
           std::abs(step_ - other.step_) <= tol;
}

UniformGrid1D default_grid() { return UniformGrid1D::centered(8.0, 512); }

} // namespace ssr
