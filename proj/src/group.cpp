#include "ssr/group.hpp"

#include <cmath>

namespace ssr {

GroupElement::GroupElement(double s, double x, double y, double b, double r)
    : s_(s), x_(x), y_(y), b_(b), r_(r) {
    if (!(std::isfinite(s) && std::isfinite(x) && std::isfinite(y) && std::isfinite(b) &&
          std::isfinite(r))) {
        throw InvalidSpecError("GroupElement: coordinates must be finite");
    }
    if (!(r > 0.0)) {
        throw InvalidSpecError("GroupElement: r must be positive");
    }
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
    const double t = g2.y() / g1.r();
    return GroupElement(
        g1.s() + g2.s() + g1.x() * t - 0.5 * g1.b() * t * t,
        g1.x() + g1.r() * g2.x() - g1.b() * t,
        g1.y() + t,
        g1.b() + g2.b() * g1.r() * g1.r(),
        g1.r() * g2.r());
}

GroupElement inverse(const GroupElement& g) {
    return GroupElement(
        -g.s() + g.x() * g.y() + 0.5 * g.b() * g.y() * g.y(),
        -(g.x() + g.b() * g.y()) / g.r(),
        -g.r() * g.y(),
        -g.b() / (g.r() * g.r()),
        1.0 / g.r());
}

Matrix4 to_matrix(const GroupElement& g) {
    Matrix4 m = Matrix4::Identity();
    m(0, 1) = -g.y() * g.r();
    m(0, 2) = (g.x() + g.b() * g.y()) / g.r();
    m(0, 3) = 2.0 * g.s() - g.y() * g.x();
    m(1, 1) = g.r();
    m(1, 2) = -g.b() / g.r();
    m(1, 3) = g.x();
    m(2, 2) = 1.0 / g.r();
    m(2, 3) = g.y();
    return m;
}

namespace {

// structure[i][j] = coefficients of [e_i, e_j] over (S, X, Y, B, R).
struct StructureTable {
    double c[5][5][5] = {};
    StructureTable() {
        auto set = [this](Basis v, Basis w, Basis out, double coeff) {
            c[static_cast<int>(v)][static_cast<int>(w)][static_cast<int>(out)] = coeff;
            c[static_cast<int>(w)][static_cast<int>(v)][static_cast<int>(out)] = -coeff;
        };
        set(Basis::X, Basis::Y, Basis::S, 1.0);
        set(Basis::X, Basis::R, Basis::X, -1.0);
        set(Basis::Y, Basis::R, Basis::Y, 1.0);
        set(Basis::Y, Basis::B, Basis::X, 1.0);
        set(Basis::R, Basis::B, Basis::B, 2.0);
    }
};

const StructureTable kStructure;

} // namespace

template <typename Scalar>
AlgebraVectorT<Scalar> bracket(const AlgebraVectorT<Scalar>& a, const AlgebraVectorT<Scalar>& b) {
    typename AlgebraVectorT<Scalar>::Coeffs out;
    out.setZero();
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Scalar prod = a.coeffs()[i] * b.coeffs()[j];
            if (prod == Scalar(0)) continue;
            for (int k = 0; k < 5; ++k) {
                const double c = kStructure.c[i][j][k];
                if (c != 0.0) out[k] += c * prod;
            }
        }
    }
    return AlgebraVectorT<Scalar>(out);
}

template AlgebraVectorT<double> bracket(const AlgebraVectorT<double>&, const AlgebraVectorT<double>&);
template AlgebraVectorT<std::complex<double>> bracket(const AlgebraVectorT<std::complex<double>>&,
                                                      const AlgebraVectorT<std::complex<double>>&);

double symplectic_form(double x1, double y1, double x2, double y2) {
    return x1 * y2 - y1 * x2;
}

HaarData measures(const GroupElement& g) {
    const double r = g.r();
    return HaarData{1.0 / (r * r * r), 1.0 / r, 1.0 / (r * r)};
}

CenterDecomposition center_decomposition(const GroupElement& g) {
    return CenterDecomposition{g.x(), g.y(), g.b(), g.r(), g.s()};
}

GroupElement section(double x, double y, double b, double r) {
    return GroupElement(0.0, x, y, b, r);
}

GroupElement exp_one_param(Basis v, double t) {
    switch (v) {
    case Basis::S: return GroupElement(t, 0, 0, 0, 1);
    case Basis::X: return GroupElement(0, t, 0, 0, 1);
    case Basis::Y: return GroupElement(0, 0, t, 0, 1);
    case Basis::B: return GroupElement(0, 0, 0, t, 1);
    case Basis::R: return GroupElement(0, 0, 0, 0, std::exp(t));
    }
    throw InvalidSpecError("exp_one_param: unknown basis direction");
}

} // namespace ssr
