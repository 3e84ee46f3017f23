#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2kit/gaussian.hpp"
#include "g2kit/linalg.hpp"

using namespace g2kit;

TEST_CASE("rank and rref") {
    Matrix<Rational> m(3, 3);
    // Rank-2 matrix: rows (1,2,3), (2,4,6), (0,1,1).
    int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(vals[i][j]);
    CHECK(rank(m) == 2);
    CHECK(rank(Matrix<Rational>::identity(5)) == 5);
    CHECK(rank(Matrix<Rational>(4, 2)) == 0);
}

TEST_CASE("nullspace vectors satisfy Mx = 0") {
    Matrix<Rational> m(2, 4);
    int vals[2][4] = {{1, 2, 0, -1}, {0, 0, 1, 4}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = Rational(vals[i][j]);
    auto basis = nullspace_basis(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        auto y = m.apply(v);
        for (const auto& e : y) CHECK(e.is_zero());
    }
}

TEST_CASE("solve recovers exact solutions") {
    Matrix<Rational> a(3, 3);
    int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = Rational(vals[i][j]);
    std::vector<Rational> want = {Rational(1, 2), Rational(-2, 3), Rational(5)};
    auto b = a.apply(want);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == want);

    // Inconsistent system.
    Matrix<Rational> s(2, 1);
    s.at(0, 0) = Rational(1);
    s.at(1, 0) = Rational(1);
    CHECK_FALSE(solve(s, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve works over the gaussian rationals") {
    Matrix<GaussianRational> a(2, 2);
    a.at(0, 0) = GaussianRational::i();
    a.at(0, 1) = GaussianRational(1);
    a.at(1, 0) = GaussianRational(1);
    a.at(1, 1) = GaussianRational(Rational(0), Rational(-1));
    // Singular (second row = -i * first): kernel dimension 1.
    CHECK(rank(a) == 1);
    CHECK(nullspace_basis(a).size() == 1);
}

TEST_CASE("symmetric signature by congruence reduction") {
    auto diag = [](std::vector<int> d) {
        Matrix<Rational> m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Rational(d[i]);
        return m;
    };
    CHECK(symmetric_signature(diag({1, -2, 3})) == std::pair<int, int>{2, 1});
    CHECK(symmetric_signature(diag({1, 1, 1, 1})) == std::pair<int, int>{4, 0});
    CHECK(symmetric_signature(diag({0, -5})) == std::pair<int, int>{0, 1});

    // Hyperbolic plane: zero diagonal, signature (1,1).
    Matrix<Rational> h(2, 2);
    h.at(0, 1) = Rational(1);
    h.at(1, 0) = Rational(1);
    CHECK(symmetric_signature(h) == std::pair<int, int>{1, 1});

    // Requires the subtraction fallback: s_jj = -2 s_kj.
    Matrix<Rational> t(2, 2);
    t.at(0, 0) = Rational(0);
    t.at(0, 1) = Rational(1);
    t.at(1, 0) = Rational(1);
    t.at(1, 1) = Rational(-2);
    CHECK(symmetric_signature(t) == std::pair<int, int>{1, 1});

    CHECK_THROWS_AS(symmetric_signature(Matrix<Rational>(2, 3)), std::invalid_argument);
}
