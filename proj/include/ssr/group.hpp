#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ssr/errors.hpp"

namespace ssr {

using Matrix4 = Eigen::Matrix4d;

// Element (s, x, y, b, r) of the shear-squeeze-rotation group: the extension
// of the polarised Heisenberg group by shear (b) and squeeze (r) actions.
// r > 0 always; construction enforces it.
class GroupElement {
public:
    GroupElement() = default; // identity (0, 0, 0, 0, 1)
    GroupElement(double s, double x, double y, double b, double r);

    static GroupElement identity() { return {}; }

    double s() const { return s_; }
    double x() const { return x_; }
    double y() const { return y_; }
    double b() const { return b_; }
    double r() const { return r_; }

private:
    double s_ = 0.0;
    double x_ = 0.0;
    double y_ = 0.0;
    double b_ = 0.0;
    double r_ = 1.0;
};

GroupElement multiply(const GroupElement& g1, const GroupElement& g2);

// Closed form; no matrix inversion at runtime.
GroupElement inverse(const GroupElement& g);

// Faithful 4x4 realization: multiply() matches the matrix product and the
// identity maps to I.
Matrix4 to_matrix(const GroupElement& g);

// Lie algebra basis, in the storage order of coefficient vectors.
enum class Basis { S = 0, X = 1, Y = 2, B = 3, R = 4 };

// Coefficient vector over the basis {S, X, Y, B, R}.  Real coefficients for
// group-side work; complex ones for representation-side combinations.
template <typename Scalar>
class AlgebraVectorT {
public:
    using Coeffs = Eigen::Matrix<Scalar, 5, 1>;

    AlgebraVectorT() { c_.setZero(); }
    explicit AlgebraVectorT(const Coeffs& c) : c_(c) {}
    AlgebraVectorT(Scalar s, Scalar x, Scalar y, Scalar b, Scalar r) {
        c_ << s, x, y, b, r;
    }

    static AlgebraVectorT unit(Basis v) {
        AlgebraVectorT a;
        a.c_[static_cast<int>(v)] = Scalar(1);
        return a;
    }

    Scalar operator[](Basis v) const { return c_[static_cast<int>(v)]; }
    Scalar& operator[](Basis v) { return c_[static_cast<int>(v)]; }
    const Coeffs& coeffs() const { return c_; }

    AlgebraVectorT operator+(const AlgebraVectorT& o) const { return AlgebraVectorT(Coeffs(c_ + o.c_)); }
    AlgebraVectorT operator-(const AlgebraVectorT& o) const { return AlgebraVectorT(Coeffs(c_ - o.c_)); }
    AlgebraVectorT operator-() const { return AlgebraVectorT(Coeffs(-c_)); }
    friend AlgebraVectorT operator*(Scalar a, const AlgebraVectorT& v) { return AlgebraVectorT(Coeffs(a * v.c_)); }

    double norm() const { return c_.norm(); }

    template <typename S2>
    AlgebraVectorT<S2> cast() const {
        return AlgebraVectorT<S2>(c_.template cast<S2>());
    }

private:
    Coeffs c_;
};

using AlgebraVector = AlgebraVectorT<double>;
using AlgebraCombo = AlgebraVectorT<std::complex<double>>;

// Structure constants: [X,Y] = S, [X,R] = -X, [Y,R] = Y, [Y,B] = X,
// [R,B] = 2B, all other basis brackets zero.
template <typename Scalar>
AlgebraVectorT<Scalar> bracket(const AlgebraVectorT<Scalar>& a, const AlgebraVectorT<Scalar>& b);

// Symplectic form on the (x, y) plane preserved by the shear-squeeze action.
double symplectic_form(double x1, double y1, double x2, double y2);

struct HaarData {
    double left_density;  // 1/r^3 against ds dx dy db dr
    double right_density; // 1/r
    double modular;       // left/right = 1/r^2
};

HaarData measures(const GroupElement& g);

// g = (0, x, y, b, r) * (s, 0, 0, 0, 1): base point and central part.
struct CenterDecomposition {
    double x;
    double y;
    double b;
    double r;
    double center; // the s coordinate of the central factor
};

CenterDecomposition center_decomposition(const GroupElement& g);

// Section of the center quotient: (x, y, b, r) -> (0, x, y, b, r).
GroupElement section(double x, double y, double b, double r);

// One-parameter subgroup exp(t V) for a basis direction V.
GroupElement exp_one_param(Basis v, double t);

} // namespace ssr
