#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2kit/decomp.hpp"
#include "g2kit/diffops.hpp"
#include "g2kit/form.hpp"
#include "g2kit/structure.hpp"

using namespace g2kit;

namespace {

const CoordinateFrame& R7 = CoordinateFrame::r7();
const CoordinateFrame& R8 = CoordinateFrame::r8();

FormQ random_form(PolySampler& gen, const CoordinateFrame& fr, int degree, int density = 3) {
    FormQ f(fr, degree);
    for (const Blade& b : blade_basis(fr, degree))
        if (gen.uniform_int(0, density) == 0) f.add_term(b, Rational(gen.uniform_int(-4, 4)));
    return f;
}

std::vector<Rational> random_vector(PolySampler& gen, int dim) {
    std::vector<Rational> v(dim);
    for (auto& x : v) x = Rational(gen.uniform_int(-3, 3));
    return v;
}

}  // namespace

TEST_CASE("blade ordering and signs") {
    CHECK(Blade({0, 1, 2}).degree() == 3);
    CHECK(Blade({0, 3}) < Blade({1, 2}));  // lexicographic on index sequences
    CHECK(Blade() < Blade({0}));
    CHECK(wedge_sign(Blade({0}), Blade({1})) == 1);
    CHECK(wedge_sign(Blade({1}), Blade({0})) == -1);
    CHECK(wedge_sign(Blade({0, 1}), Blade({0})) == 0);
    auto bs = blade_from_sequence({4, 1, 6});
    REQUIRE(bs.has_value());
    CHECK(bs->first == Blade({1, 4, 6}));
    CHECK(bs->second == -1);
    CHECK_FALSE(blade_from_sequence({2, 2}).has_value());
}

TEST_CASE("wedge antisymmetry and bilinearity") {
    FormQ dx1 = FormQ::covector(R7, 0);
    FormQ dx2 = FormQ::covector(R7, 1);
    FormQ w12 = wedge(dx1, dx2);
    CHECK(w12.coefficient(Blade({0, 1})) == Rational(1));
    CHECK(wedge(dx2, dx1) == -w12);
    CHECK(wedge(dx1, dx1).is_zero());
}

TEST_CASE("wedge graded commutativity and associativity on random forms") {
    PolySampler gen(19, 0);
    for (int rep = 0; rep < 30; ++rep) {
        int p = gen.uniform_int(0, 3);
        int q = gen.uniform_int(0, 3);
        int r = gen.uniform_int(0, 7 - p - q >= 0 ? std::min(2, 7 - p - q) : 0);
        FormQ a = random_form(gen, R7, p);
        FormQ b = random_form(gen, R7, q);
        FormQ c = random_form(gen, R7, r);
        FormQ ab = wedge(a, b);
        FormQ ba = wedge(b, a);
        CHECK(ab == ((p * q) % 2 ? -ba : ba));
        CHECK(wedge(ab, c) == wedge(a, wedge(b, c)));
    }
    CHECK_THROWS_AS(wedge(FormQ::covector(R7, 0), FormQ::covector(R8, 0)), std::invalid_argument);
}

TEST_CASE("interior product basics") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    std::vector<Rational> e0(7, Rational(0));
    e0[0] = Rational(1);
    CHECK(interior_product(e0, vol3_r7()) ==
          FormQ::monomial(R7, {1, 2}, Rational(1)));  // e_x1 -| dx1dx2dx3 = dx2dx3

    // The t-direction contraction of phi is minus the Kaehler form in this
    // convention (the displayed formula with h = 1).
    std::vector<Rational> dt(7, Rational(0));
    dt[r7::Y0] = Rational(1);
    CHECK(interior_product(dt, pkg.phi) == -pkg.omega3);

    CHECK_THROWS_AS(interior_product(dt, FormQ::scalar(R7, Rational(1))), std::invalid_argument);
    CHECK_THROWS_AS(interior_product(std::vector<Rational>(3), pkg.phi), std::invalid_argument);
}

TEST_CASE("interior product is an antiderivation and squares to zero") {
    PolySampler gen(23, 0);
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    for (int rep = 0; rep < 25; ++rep) {
        auto v = random_vector(gen, 7);
        FormQ a = random_form(gen, R7, 2);
        FormQ b = random_form(gen, R7, 3);
        // v -| (a^b) = (v -| a)^b + (-1)^|a| a^(v -| b)
        FormQ lhs = interior_product(v, wedge(a, b));
        FormQ rhs = wedge(interior_product(v, a), b) + wedge(a, interior_product(v, b));
        CHECK(lhs == rhs);
        CHECK(interior_product(v, interior_product(v, pkg.phi)).is_zero());
    }
}

TEST_CASE("interior product is adjoint to wedging with the dual covector") {
    PolySampler gen(29, 0);
    for (int rep = 0; rep < 25; ++rep) {
        auto v = random_vector(gen, 7);
        FormQ a = random_form(gen, R7, 3);
        FormQ b = random_form(gen, R7, 2);
        FormQ vflat(R7, 1);
        for (int i = 0; i < 7; ++i) vflat.add_term(Blade({i}), v[i]);
        CHECK(form_inner_product(interior_product(v, a), b) ==
              form_inner_product(a, wedge(vflat, b)));
    }
}

TEST_CASE("hodge star identities") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    CHECK(hodge_star(pkg.phi) == pkg.psi);
    CHECK(hodge_star(pkg.big_phi) == pkg.big_phi);

    PolySampler gen(31, 0);
    for (int rep = 0; rep < 20; ++rep) {
        int p7 = gen.uniform_int(0, 7);
        FormQ a = random_form(gen, R7, p7);
        CHECK(hodge_star(hodge_star(a)) == a);  // ** = id in odd dimension
        FormQ b = random_form(gen, R7, p7);
        CHECK(form_inner_product(hodge_star(a), hodge_star(b)) == form_inner_product(a, b));
        // a ^ *b = <a,b> vol
        FormQ wedge_ab = wedge(a, hodge_star(b));
        CHECK(top_coefficient(wedge_ab) == form_inner_product(a, b));

        int p8 = gen.uniform_int(0, 8);
        FormQ c = random_form(gen, R8, p8);
        FormQ d = random_form(gen, R8, p8);
        CHECK(form_inner_product(hodge_star(c), hodge_star(d)) == form_inner_product(c, d));
        int sign = (p8 * (8 - p8)) % 2 ? -1 : 1;
        CHECK(hodge_star(hodge_star(c)) == (sign < 0 ? -c : c));
    }

    // Orientation flag flips the sign of the star.
    FormQ a = FormQ::monomial(R7, {0, 1, 2}, Rational(1));
    CHECK(hodge_star(a, -1) == -hodge_star(a));
    CHECK_THROWS_AS(hodge_star(a, 2), std::invalid_argument);
}

TEST_CASE("form inner products of the canonical forms") {
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    CHECK(form_inner_product(pkg.phi, pkg.phi) == Rational(7));
    CHECK(form_inner_product(pkg.re_Omega3(), pkg.re_Omega3()) == Rational(4));
    CHECK(form_inner_product(pkg.im_Omega3(), pkg.im_Omega3()) == Rational(4));
    CHECK(form_inner_product(FormQ::covector(R7, 0), FormQ::covector(R7, 1)) == Rational(0));
    CHECK_THROWS_AS(form_inner_product(pkg.phi, pkg.psi), std::invalid_argument);
}

TEST_CASE("volume forms and the product splitting") {
    FormQ dt = FormQ::covector(R7, r7::Y0);
    CHECK(wedge(dt, vol6_r7()) == vol7_r7());
    CHECK(wedge(vol3_r7(), vol4_r7()) == vol7_r7());
    CHECK(top_coefficient(vol8_r8()) == Rational(1));
}

TEST_CASE("metric-aware inner product and star signs") {
    MetricData split;
    split.diagonal = {Rational(1), Rational(1), Rational(1), Rational(-1),
                      Rational(-1), Rational(-1), Rational(-1)};
    FormQ a = FormQ::monomial(R7, {3, 4}, Rational(1));
    CHECK(form_inner_product(a, a, &split) == Rational(1));  // (-1)*(-1)
    FormQ b = FormQ::monomial(R7, {0, 3}, Rational(1));
    CHECK(form_inner_product(b, b, &split) == Rational(-1));
    // Star with the split metric stays an involution up to the metric signs.
    FormQ sa = hodge_star(a, +1, &split);
    CHECK(sa.degree() == 5);

    MetricData bad;
    bad.diagonal = {Rational(2), Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(
        hodge_star(FormQ::covector(CoordinateFrame::x_block(), 0), +1, &bad),
        std::invalid_argument);
}

TEST_CASE("substitution machinery round trips") {
    PolySampler gen(37, 0);
    for (int rep = 0; rep < 10; ++rep) {
        FormG f = to_gaussian(random_form(gen, R7, gen.uniform_int(1, 3)));
        CHECK(from_complex_basis(to_complex_basis(f)) == f);
    }
    // y0 -> -y0 twice is the identity.
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    CHECK(flip_coordinate(flip_coordinate(pkg.phi, r7::Y0), r7::Y0) == pkg.phi);
}
