#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dimers/families.hpp"
#include "dimers/mahler.hpp"

using namespace dimers;

namespace {
const double kLog2 = std::log(2.0);
}

TEST_CASE("constants and monomials") {
    CHECK(mahler_quadrature(LaurentPoly2(Rational(2))).value == Catch::Approx(kLog2).margin(1e-12));
    CHECK(mahler_jensen(LaurentPoly2(Rational(-5))) == Catch::Approx(std::log(5.0)).margin(1e-12));
    // m(c x^a y^b) = log|c|
    LaurentPoly2 mono = LaurentPoly2::monomial(3, -2, Rational(7));
    CHECK(mahler_quadrature(mono).value == Catch::Approx(std::log(7.0)).margin(1e-10));
    CHECK_THROWS_AS(mahler_quadrature(LaurentPoly2()), std::invalid_argument);
    CHECK_THROWS_AS(mahler_jensen(LaurentPoly2()), std::invalid_argument);
    CHECK_THROWS_AS(mahler_quadrature(LaurentPoly2(Rational(1)), 8), std::invalid_argument);
}

TEST_CASE("one-variable classics") {
    // m(y - 2) = log 2, m(2y^2 - 5y + 2) = m(2(y-2)(y-1/2)) = log 4
    LaurentPoly2 p = LaurentPoly2::monomial(0, 1) - LaurentPoly2(Rational(2));
    CHECK(mahler_jensen(p) == Catch::Approx(kLog2).margin(1e-10));
    LaurentPoly2 q = LaurentPoly2::monomial(0, 2, Rational(2)) +
                     LaurentPoly2::monomial(0, 1, Rational(-5)) + LaurentPoly2(Rational(2));
    CHECK(mahler_jensen(q) == Catch::Approx(2 * kLog2).margin(1e-10));
    // root on the unit circle: m(y - 1) = 0
    LaurentPoly2 r = LaurentPoly2::monomial(0, 1) - LaurentPoly2(Rational(1));
    CHECK(mahler_jensen(r) == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("invariance under monomial rescaling and inversion") {
    LaurentPoly2 p = family_poly(6, Rational(11));
    double base = mahler_quadrature(p).value;
    CHECK(mahler_quadrature(LaurentPoly2::monomial(2, -1) * p).value ==
          Catch::Approx(base).margin(1e-9));
    CHECK(mahler_quadrature(p.substitute_inverse()).value == Catch::Approx(base).margin(1e-9));
    CHECK(mahler_quadrature(p.scale_exponents(1, 2)).value == Catch::Approx(base).margin(1e-8));
}

TEST_CASE("multiplicativity") {
    LaurentPoly2 p = family_poly(3, Rational(7));
    LaurentPoly2 q = LaurentPoly2::monomial(1, 1) + LaurentPoly2(Rational(5));
    double mp = mahler_quadrature(p).value;
    double mq = mahler_quadrature(q).value;
    double mpq = mahler_quadrature(p * q).value;
    CHECK(mpq == Catch::Approx(mp + mq).margin(1e-8));
}

TEST_CASE("quadrature and radial Jensen evaluation agree") {
    for (int family : {6, 3, 4}) {
        for (int s : {8, 10, 15}) {
            auto cc = mahler_cross_check(family_poly(family, Rational(s)));
            CHECK(cc.gap < 1e-8);
            CHECK(cc.quadrature == Catch::Approx(cc.jensen).margin(1e-8));
        }
    }
}

TEST_CASE("reference value for the three-term family") {
    // dominant-constant regime, s = 10
    double m = mahler_quadrature(family_poly(3, Rational(10))).value;
    CHECK(m == Catch::Approx(2.300569903388441).margin(1e-9));
}

TEST_CASE("resolution control and error indicator") {
    LaurentPoly2 p = family_poly(6, Rational(12));
    auto coarse = mahler_quadrature(p, 64);
    auto fine = mahler_quadrature(p, 1024);
    CHECK(std::abs(fine.value - coarse.value) < 1e-6);
    CHECK(fine.error_indicator <= coarse.error_indicator + 1e-12);
    CHECK(fine.error_indicator < 1e-9);
}
