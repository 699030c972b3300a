#include <catch2/catch_amalgamated.hpp>

#include "qtop/rational.hpp"

using namespace qtop;

TEST_CASE("rationals are stored canonically") {
    Rational r(6, 4);
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    Rational s(-3, -6);
    CHECK(s.numerator() == 1);
    CHECK(s.denominator() == 2);
    Rational t(5, -10);
    CHECK(t.numerator() == -1);
    CHECK(t.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parsing and rendering") {
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(0).str() == "0");
    CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(4) == Rational(24));
    CHECK(pow(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(pow(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("no overflow on large values") {
    Rational big = pow(Rational(10), 30) + Rational(1, 3);
    CHECK(big.denominator() == 3);
    CHECK(big > pow(Rational(10), 29));
}
