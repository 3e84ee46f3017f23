#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2kit/diffops.hpp"
#include "g2kit/gaussian.hpp"
#include "g2kit/polynomial.hpp"
#include "g2kit/rational.hpp"

using namespace g2kit;

namespace {

Rational rnd_q(PolySampler& gen) {
    int den = 0;
    while (den == 0) den = gen.uniform_int(-4, 4);
    return Rational(gen.uniform_int(-6, 6), den);
}

GaussianRational rnd_g(PolySampler& gen) { return {rnd_q(gen), rnd_q(gen)}; }

}  // namespace

TEST_CASE("rational basics and normal form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(2, 4).numerator_str() == "1");
    CHECK(Rational(2, 4).denominator_str() == "2");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random values") {
    PolySampler gen(7, 0);
    for (int rep = 0; rep < 200; ++rep) {
        Rational a = rnd_q(gen), b = rnd_q(gen), c = rnd_q(gen);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
    }
}

TEST_CASE("rational arbitrary precision") {
    // 2^200 as a decimal string survives a round trip and exact arithmetic.
    Rational big = Rational::from_decimal_strings(
        "1606938044258990275541962092341162602522202993782792835301376", "1");
    Rational r = big * big / big;
    CHECK(r == big);
    CHECK(big.numerator_str().size() == 61);
}

TEST_CASE("gaussian rational ring and conjugation") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(conj(GaussianRational(Rational(2), Rational(3))) ==
          GaussianRational(Rational(2), Rational(-3)));
    CHECK(conj(GaussianRational(5)) == GaussianRational(5));
    CHECK(GaussianRational(Rational(2), Rational(3)).str() == "2+3i");
    CHECK(GaussianRational(Rational(0), Rational(-1, 2)).str() == "-1/2i");

    PolySampler gen(11, 0);
    for (int rep = 0; rep < 100; ++rep) {
        GaussianRational z = rnd_g(gen), w = rnd_g(gen);
        CHECK(conj(conj(z)) == z);
        CHECK(conj(z * w) == conj(z) * conj(w));
        CHECK(conj(z + w) == conj(z) + conj(w));
        CHECK(z.norm_sq() == (z * conj(z)).re());
        CHECK((z * conj(z)).im() == Rational(0));
        CHECK(z.norm_sq().sign() >= 0);
        if (!w.is_zero()) CHECK(z / w * w == z);
    }
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST_CASE("polynomial arithmetic") {
    Polynomial x1 = Polynomial::variable(0);
    CHECK(x1 * (x1 + Polynomial(1)) == x1 * x1 + x1);
    CHECK((x1 - x1).is_zero());
    CHECK(Polynomial(Rational(1, 2)) + Polynomial(Rational(1, 2)) == Polynomial(1));
    CHECK(Polynomial(0).is_zero());
    CHECK(x1.total_degree() == 1);
    CHECK((x1 * x1 * x1).total_degree() == 3);

    PolySampler gen(13, 3);
    for (int rep = 0; rep < 50; ++rep) {
        Polynomial p = gen.polynomial(), q = gen.polynomial(), r = gen.polynomial();
        CHECK(p * q == q * p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("formal partial derivatives") {
    Polynomial x1 = Polynomial::variable(0);
    Polynomial x2 = Polynomial::variable(1);
    CHECK((x1 * x1).derivative(0) == Polynomial(2) * x1);
    CHECK(x1.derivative(1).is_zero());
    CHECK(Polynomial(5).derivative(3).is_zero());

    PolySampler gen(17, 3);
    for (int rep = 0; rep < 50; ++rep) {
        Polynomial p = gen.polynomial(), q = gen.polynomial();
        // Mixed partials commute; both orders expanded term by term.
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                CHECK(p.derivative(a).derivative(b) == p.derivative(b).derivative(a));
        // Linearity and the Leibniz rule.
        CHECK((p + q).derivative(2) == p.derivative(2) + q.derivative(2));
        CHECK((p * q).derivative(4) == p.derivative(4) * q + p * q.derivative(4));
    }
    CHECK_THROWS_AS(x2.derivative(7), std::out_of_range);
}

TEST_CASE("polynomial rendering is canonical") {
    Polynomial p = Polynomial::variable(0) * Polynomial::variable(0) * Polynomial(2) -
                   Polynomial::variable(6) + Polynomial(Rational(1, 3));
    CHECK(p.str() == "1/3 + 2*x1^2 - y3");
}
