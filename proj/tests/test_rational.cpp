#include <doctest.h>

#include <random>

#include "liecoh/rational.hpp"

using liecoh::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(-4, 8).to_string() == "-1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(42).to_string() == "42");
    CHECK(Rational(6, 3) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(5, 3) == Rational(-5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational parse and serialize round-trip") {
    CHECK(Rational::from_string("-3/7").to_string() == "-3/7");
    CHECK(Rational::from_string("5").to_string() == "5");
    CHECK(Rational::from_string("+4/6").to_string() == "2/3");
    CHECK(Rational::from_string("0/9") == Rational(0));
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1 /2"), std::invalid_argument);
}

TEST_CASE("random sums stay normalized") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        const Rational s = a + b;
        // round-trips bit-exactly through the text form
        CHECK(Rational::from_string(s.to_string()) == s);
        CHECK(s - b == a);
    }
}
