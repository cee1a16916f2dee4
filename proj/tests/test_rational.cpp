#include <catch2/catch_amalgamated.hpp>

#include "mdim/rational.hpp"
#include "support/oracles.hpp"

using mdim::Rational;

TEST_CASE("construction normalizes to lowest terms, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(9, 3).is_integer());
    CHECK(Rational(9, 3).numerator() == 3);
    CHECK(Rational(9, 3).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), mdim::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(5, 3) * Rational(3) == Rational(5));
    CHECK(Rational(1) - Rational(7, 6) == Rational(-1, 6));
    CHECK(Rational(3, 2) / Rational(3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), mdim::domain_error);

    // no drift over long chains
    Rational sum = 0;
    for (int i = 1; i <= 50; ++i) sum += Rational(1, i);
    Rational back = sum;
    for (int i = 1; i <= 50; ++i) back -= Rational(1, i);
    CHECK(back == Rational(0));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 2) > 3);
    CHECK(Rational(4, 2) == 2);
    CHECK(Rational(5, 3) <= Rational(5, 3));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 2).floor() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
}

TEST_CASE("serialization: p/q or bare p") {
    CHECK(Rational(5, 3).to_string() == "5/3");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(0).to_string() == "0");
}

TEST_CASE("parsing accepts p, p/q and finite decimals") {
    CHECK(Rational::parse("5/3") == Rational(5, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("2.5") == Rational(5, 2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-0.75") == Rational(-3, 4));
    CHECK(Rational::parse(" 7/2 ") == Rational(7, 2));
    CHECK(Rational::parse("+3") == Rational(3));

    CHECK_THROWS_AS(Rational::parse(""), mdim::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), mdim::parse_error);
    CHECK_THROWS_AS(Rational::parse("a/b"), mdim::parse_error);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), mdim::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), mdim::parse_error);
    CHECK_THROWS_AS(Rational::parse("."), mdim::parse_error);
}

TEST_CASE("parse/to_string round trip on random rationals") {
    mdim::testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const long long num = rng.below(2001) - 1000;
        const long long den = 1 + rng.below(400);
        const Rational r(num, den);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}
