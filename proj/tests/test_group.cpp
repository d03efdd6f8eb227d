#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "ssr/group.hpp"

using namespace ssr;

namespace {

using Vec5 = Eigen::Matrix<double, 5, 1>;

Vec5 coords(const GroupElement& g) {
    Vec5 v;
    v << g.s(), g.x(), g.y(), g.b(), g.r();
    return v;
}

double coord_diff(const GroupElement& a, const GroupElement& b) {
    return (coords(a) - coords(b)).cwiseAbs().maxCoeff();
}

GroupElement random_element(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    std::uniform_real_distribution<double> lr(-1.0, 1.0);
    const double s = c(rng), x = c(rng), y = c(rng), b = c(rng);
    return GroupElement(s, x, y, b, std::exp(lr(rng)));
}

// Generators of the 4x4 realization, read off from the matrix at the
// identity.
Matrix4 generator(Basis v) {
    Matrix4 m = Matrix4::Zero();
    switch (v) {
    case Basis::S: m(0, 3) = 2.0; break;
    case Basis::X: m(0, 2) = 1.0; m(1, 3) = 1.0; break;
    case Basis::Y: m(0, 1) = -1.0; m(2, 3) = 1.0; break;
    case Basis::B: m(1, 2) = -1.0; break;
    case Basis::R: m(1, 1) = 1.0; m(2, 2) = -1.0; break;
    }
    return m;
}

} // namespace

TEST_CASE("group law matches the matrix product") {
    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const GroupElement g1 = random_element(rng);
        const GroupElement g2 = random_element(rng);
        const Matrix4 lhs = to_matrix(multiply(g1, g2));
        const Matrix4 rhs = to_matrix(g1) * to_matrix(g2);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("shift product example") {
    const GroupElement g = multiply(GroupElement(0, 1, 0, 0, 1), GroupElement(0, 0, 1, 0, 1));
    CHECK(coord_diff(g, GroupElement(1, 1, 1, 0, 1)) < 1e-15);
}

TEST_CASE("identity and constructor validation") {
    CHECK(coord_diff(GroupElement(), GroupElement::identity()) == 0.0);
    CHECK(GroupElement::identity().r() == 1.0);
    CHECK_THROWS_AS(GroupElement(0, 0, 0, 0, 0.0), InvalidSpecError);
    CHECK_THROWS_AS(GroupElement(0, 0, 0, 0, -1.0), InvalidSpecError);
}

TEST_CASE("inverse cancels on both sides") {
    std::mt19937_64 rng(32);
    double worst = 0.0, worst_matrix = 0.0;
    for (int k = 0; k < 200; ++k) {
        const GroupElement g = random_element(rng);
        worst = std::max(worst, coord_diff(multiply(g, inverse(g)), GroupElement::identity()));
        worst = std::max(worst, coord_diff(multiply(inverse(g), g), GroupElement::identity()));
        const Matrix4 direct = to_matrix(inverse(g));
        const Matrix4 via_eigen = to_matrix(g).inverse();
        worst_matrix = std::max(worst_matrix, (direct - via_eigen).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-12);
    CHECK(worst_matrix < 1e-10);
}

TEST_CASE("associativity") {
    std::mt19937_64 rng(33);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const GroupElement a = random_element(rng);
        const GroupElement b = random_element(rng);
        const GroupElement c = random_element(rng);
        worst = std::max(worst,
                         coord_diff(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("one-parameter subgroups match the matrix exponential") {
    for (int v = 0; v < 5; ++v) {
        const Matrix4 m = generator(static_cast<Basis>(v));
        for (const double t : {0.3, -0.7, 1.1}) {
            const Matrix4 viaExp = Matrix4(t * m).exp();
            const Matrix4 viaGroup = to_matrix(exp_one_param(static_cast<Basis>(v), t));
            CHECK((viaExp - viaGroup).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("one-parameter subgroups are additive") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> t(-1.0, 1.0);
    double worst = 0.0;
    for (int v = 0; v < 5; ++v) {
        for (int k = 0; k < 20; ++k) {
            const double a = t(rng), b = t(rng);
            worst = std::max(worst, coord_diff(multiply(exp_one_param(static_cast<Basis>(v), a),
                                                        exp_one_param(static_cast<Basis>(v), b)),
                                               exp_one_param(static_cast<Basis>(v), a + b)));
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("structure constants match matrix commutators") {
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            const Matrix4 mi = generator(static_cast<Basis>(i));
            const Matrix4 mj = generator(static_cast<Basis>(j));
            const Matrix4 lhs = mi * mj - mj * mi;
            const AlgebraVector c = bracket(AlgebraVector::unit(static_cast<Basis>(i)),
                                            AlgebraVector::unit(static_cast<Basis>(j)));
            Matrix4 rhs = Matrix4::Zero();
            for (int k = 0; k < 5; ++k) {
                rhs += c[static_cast<Basis>(k)] * generator(static_cast<Basis>(k));
            }
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
        }
    }
}

TEST_CASE("bracket table") {
    const auto S = AlgebraVector::unit(Basis::S);
    const auto X = AlgebraVector::unit(Basis::X);
    const auto Y = AlgebraVector::unit(Basis::Y);
    const auto B = AlgebraVector::unit(Basis::B);
    const auto R = AlgebraVector::unit(Basis::R);

    CHECK((bracket(X, Y) - S).norm() == 0.0);
    CHECK((bracket(X, R) - (-1.0) * X).norm() == 0.0);
    CHECK((bracket(Y, R) - Y).norm() == 0.0);
    CHECK((bracket(Y, B) - X).norm() == 0.0);
    CHECK((bracket(R, B) - 2.0 * B).norm() == 0.0);
    CHECK(bracket(S, X).norm() == 0.0);
    CHECK(bracket(S, R).norm() == 0.0);
    CHECK(bracket(X, B).norm() == 0.0);
}

TEST_CASE("Jacobi identity on random combinations") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const AlgebraVector a(c(rng), c(rng), c(rng), c(rng), c(rng));
        const AlgebraVector b(c(rng), c(rng), c(rng), c(rng), c(rng));
        const AlgebraVector d(c(rng), c(rng), c(rng), c(rng), c(rng));
        const AlgebraVector jac = bracket(a, bracket(b, d)) + bracket(b, bracket(d, a)) +
                                  bracket(d, bracket(a, b));
        CHECK(jac.norm() < 1e-12);
    }
}

TEST_CASE("coordinate action preserves the symplectic form") {
    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    std::uniform_real_distribution<double> rd(0.5, 2.0);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double b = c(rng), r = rd(rng);
        const double x1 = c(rng), y1 = c(rng), x2 = c(rng), y2 = c(rng);
        const double tx1 = r * x1 - b / r * y1, ty1 = y1 / r;
        const double tx2 = r * x2 - b / r * y2, ty2 = y2 / r;
        worst = std::max(worst, std::abs(symplectic_form(tx1, ty1, tx2, ty2) -
                                         symplectic_form(x1, y1, x2, y2)));
    }
    CHECK(worst < 1e-12);
    CHECK(symplectic_form(1.0, 0.0, 0.0, 1.0) == 1.0);
}

TEST_CASE("Haar densities are invariant under translation") {
    std::mt19937_64 rng(37);
    const double fd = 1e-5;
    double worst_left = 0.0, worst_right = 0.0;
    for (int k = 0; k < 20; ++k) {
        const GroupElement g0 = random_element(rng);
        const GroupElement g = random_element(rng);
        Eigen::Matrix<double, 5, 5> jl, jr;
        for (int j = 0; j < 5; ++j) {
            Vec5 vp = coords(g), vm = coords(g);
            vp[j] += fd;
            vm[j] -= fd;
            const GroupElement gp(vp[0], vp[1], vp[2], vp[3], vp[4]);
            const GroupElement gm(vm[0], vm[1], vm[2], vm[3], vm[4]);
            jl.col(j) = (coords(multiply(g0, gp)) - coords(multiply(g0, gm))) / (2.0 * fd);
            jr.col(j) = (coords(multiply(gp, g0)) - coords(multiply(gm, g0))) / (2.0 * fd);
        }
        const double left_g = measures(g).left_density;
        const double left_tg = measures(multiply(g0, g)).left_density;
        worst_left = std::max(worst_left,
                              std::abs(left_tg * std::abs(jl.determinant()) - left_g) / left_g);
        const double right_g = measures(g).right_density;
        const double right_tg = measures(multiply(g, g0)).right_density;
        worst_right = std::max(
            worst_right, std::abs(right_tg * std::abs(jr.determinant()) - right_g) / right_g);
    }
    CHECK(worst_left < 1e-6);
    CHECK(worst_right < 1e-6);
}

TEST_CASE("Haar density values and modular function") {
    const GroupElement g(0.3, -0.4, 0.9, 1.2, 2.0);
    const HaarData m = measures(g);
    CHECK(m.left_density == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
    CHECK(m.right_density == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.modular == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(std::abs(m.left_density / m.right_density - m.modular) < 1e-15);
}

TEST_CASE("center decomposition recomposes the element") {
    std::mt19937_64 rng(38);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const GroupElement g = random_element(rng);
        const CenterDecomposition d = center_decomposition(g);
        const GroupElement back =
            multiply(section(d.x, d.y, d.b, d.r), GroupElement(d.center, 0, 0, 0, 1));
        worst = std::max(worst, coord_diff(back, g));
        CHECK(d.x == g.x());
        CHECK(d.y == g.y());
        CHECK(d.b == g.b());
        CHECK(d.r == g.r());
    }
    CHECK(worst < 1e-12);
    CHECK(center_decomposition(section(0.3, -0.2, 0.9, 1.4)).center == 0.0);
}
