#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2kit/diffops.hpp"
#include "g2kit/octonion.hpp"
#include "g2kit/structure.hpp"

using namespace g2kit;

using OQ = Octonion<Rational>;

namespace {

OQ random_oct(PolySampler& gen) {
    std::array<Rational, 8> c;
    for (auto& v : c) v = Rational(gen.uniform_int(-3, 3));
    return OQ::from_components(c);
}

OQ random_imag(PolySampler& gen) {
    OQ o = random_oct(gen);
    o.a.c[0] = Rational(0);
    return o;
}

}  // namespace

TEST_CASE("quaternion multiplication table") {
    using QQ = Quaternion<Rational>;
    QQ i = QQ::basis(1), j = QQ::basis(2), k = QQ::basis(3);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == -QQ::basis(0));
    CHECK(j * i == -k);
    CHECK(conj(i) == -i);
    PolySampler gen(3, 0);
    for (int rep = 0; rep < 30; ++rep) {
        std::array<Rational, 8> c;
        for (auto& v : c) v = Rational(gen.uniform_int(-3, 3));
        QQ p{c[0], c[1], c[2], c[3]}, q{c[4], c[5], c[6], c[7]};
        CHECK(conj(p * q) == conj(q) * conj(p));
    }
}

TEST_CASE("octonion unit, e-squared, and doubling signs") {
    OQ one = OQ::basis(0);
    OQ e = OQ::basis(4);
    // e*e expanded by the doubling formula with a = b = 0, remaining parts 1:
    // (0*0 - conj(1)*1, 1*0 + 0*conj(0)) = (-1, 0).
    CHECK(e * e == -one);
    PolySampler gen(5, 0);
    for (int rep = 0; rep < 20; ++rep) {
        OQ q = random_oct(gen);
        CHECK(one * q == q);
        CHECK(q * one == q);
        CHECK(conj(conj(q)) == q);
        CHECK((q * conj(q)).component(0) == octonion_norm_sq(q));
        for (int k = 1; k < 8; ++k) CHECK((q * conj(q)).component(k) == Rational(0));
    }
}

TEST_CASE("octonion norm is multiplicative") {
    PolySampler gen(7, 0);
    for (int rep = 0; rep < 50; ++rep) {
        OQ p = random_oct(gen), q = random_oct(gen);
        CHECK(octonion_norm_sq(p * q) == octonion_norm_sq(p) * octonion_norm_sq(q));
    }
}

TEST_CASE("associator is alternating and detects non-associativity") {
    OQ i = OQ::basis(1), j = OQ::basis(2), e = OQ::basis(4);
    OQ a = associator(i, j, e);
    CHECK_FALSE(a.is_zero());
    CHECK(a.component(0) == Rational(0));  // imaginary
    PolySampler gen(11, 0);
    for (int rep = 0; rep < 25; ++rep) {
        OQ x = random_oct(gen), y = random_oct(gen), z = random_oct(gen);
        CHECK(associator(x, x, z).is_zero());
        CHECK(associator(x, y, y).is_zero());
        CHECK(associator(x, y, z) == -associator(y, x, z));
        CHECK(associator(x, y, z) == -associator(x, z, y));
    }
}

TEST_CASE("triple cross against its defining expansion") {
    OQ one = OQ::basis(0), i = OQ::basis(1), j = OQ::basis(2);
    // X(1,i,j) = (1 (conj(i) j) - j (conj(i) 1)) / 2 expanded directly.
    OQ expect_twice = one * (conj(i) * j) - j * (conj(i) * one);
    OQ got = triple_cross(one, i, j);
    OQ got_twice = got + got;
    CHECK(got_twice == expect_twice);
    PolySampler gen(13, 0);
    for (int rep = 0; rep < 25; ++rep) {
        OQ x = random_oct(gen), y = random_oct(gen), z = random_oct(gen);
        CHECK(triple_cross(x, x, z).is_zero());
        CHECK(triple_cross(x, y, y).is_zero());
        CHECK(octonion_inner(triple_cross(x, y, z), x).is_zero());
        CHECK(octonion_inner(triple_cross(x, y, z), z).is_zero());
    }
}

TEST_CASE("the 4-form reproduces the triple-cross pairing and alternates") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    PolySampler gen(17, 0);
    // Phi(x,y,z,w) = <x, X(y,z,w)> evaluated via the multilinear extension on
    // random basis indices, including repeated ones.
    for (int rep = 0; rep < 200; ++rep) {
        int i = gen.uniform_int(0, 7), j = gen.uniform_int(0, 7);
        int k = gen.uniform_int(0, 7), l = gen.uniform_int(0, 7);
        Rational want = octonion_inner(OQ::basis(i), triple_cross(OQ::basis(j), OQ::basis(k), OQ::basis(l)));
        auto bs = blade_from_sequence({i, j, k, l});
        Rational got(0);
        if (bs) {
            got = pkg.big_phi.coefficient(bs->first);
            if (bs->second < 0) got = -got;
        }
        CHECK(got == want);
    }
}

TEST_CASE("phi and psi reproduce their octonion definitions") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k) {
                Rational want = octonion_inner(OQ::imaginary_basis(i),
                                               OQ::imaginary_basis(j) * OQ::imaginary_basis(k));
                auto bs = blade_from_sequence({i, j, k});
                Rational got(0);
                if (bs) {
                    got = pkg.phi.coefficient(bs->first);
                    if (bs->second < 0) got = -got;
                }
                CHECK(got == want);
            }
    // psi = *phi agrees with the associator route (checked on all blades).
    const auto& t4 = psi_constants();
    FormQ star_phi = hodge_star(pkg.phi);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                for (int l = k + 1; l < 7; ++l)
                    CHECK(star_phi.coefficient(Blade({i, j, k, l})) == Rational(t4[i][j][k][l]));
}

TEST_CASE("seven-dimensional cross product") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    OQ ex1 = OQ::imaginary_basis(0), ex2 = OQ::imaginary_basis(1), ex3 = OQ::imaginary_basis(2);
    // The phi coefficient on dx1dx2dx3 is +1, which fixes e_x1 x e_x2 = +e_x3.
    CHECK(cross7(ex1, ex2) == ex3);

    PolySampler gen(19, 0);
    for (int rep = 0; rep < 30; ++rep) {
        OQ u = random_imag(gen), v = random_imag(gen);
        CHECK(cross7(u, u).is_zero());
        CHECK(cross7(u, v) == -cross7(v, u));
        CHECK(octonion_inner(cross7(u, v), u).is_zero());
        Rational n = octonion_norm_sq(cross7(u, v));
        CHECK(n == octonion_norm_sq(u) * octonion_norm_sq(v) -
                       octonion_inner(u, v) * octonion_inner(u, v));
        // Octonion route: u x v = Im(uv) for imaginary u, v.
        OQ prod = u * v;
        OQ expect = prod;
        expect.a.c[0] = Rational(0);
        CHECK(cross7(u, v) == expect);
    }
    CHECK_THROWS_AS(cross7(OQ::basis(0), OQ::basis(1)), std::invalid_argument);
}

TEST_CASE("iterated cross identity on all basis triples") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    const auto& t4 = psi_constants();
    for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y)
            for (int z = 0; z < 7; ++z) {
                OQ ex = OQ::imaginary_basis(x), ey = OQ::imaginary_basis(y),
                   ez = OQ::imaginary_basis(z);
                OQ lhs = cross7(ex, cross7(ey, ez));
                // -<X,Y>Z + <X,Z>Y - (X -| Y -| Z -| psi)#
                for (int i = 0; i < 7; ++i) {
                    Rational rhs(0);
                    if (x == y && i == z) rhs -= Rational(1);
                    if (x == z && i == y) rhs += Rational(1);
                    rhs -= Rational(t4[z][y][x][i]);
                    CHECK(lhs.component(i + 1) == rhs);
                }
            }
}
