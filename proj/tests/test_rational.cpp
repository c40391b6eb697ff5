#include "doctest.h"

#include <limits>
#include <stdexcept>

#include "bridgeland/quadratic.hpp"
#include "bridgeland/rational.hpp"
#include "oracles.hpp"

using namespace bridgeland;

TEST_CASE("rational normalization and printing") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, -7).to_string() == "0");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(9, 3).to_string() == "3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(Rational::parse("-0.1") == Rational(-1, 10));
    CHECK(Rational::parse("2.2") == Rational(11, 5));
    CHECK(Rational::parse("1.15") == Rational(23, 20));
    CHECK(Rational::parse("-1.05") == Rational(-21, 20));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    for (const char* bad : {"", "/", "1/", "x", "1.2.3", "1/0", "1.-2", "--1"})
        CHECK_THROWS_AS((void)Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
    for (int i = 0; i < 500; ++i) {
        const Rational q(oracle::uniform(-1000, 1000), oracle::uniform(1, 999));
        CHECK(Rational::parse(q.to_string()) == q);
    }
}

TEST_CASE("rational floor and ceil") {
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(4).floor() == 4);
    CHECK(Rational(4).ceil() == 4);
}

TEST_CASE("rational field laws on random values") {
    for (int i = 0; i < 300; ++i) {
        const Rational a(oracle::uniform(-50, 50), oracle::uniform(1, 40));
        const Rational b(oracle::uniform(-50, 50), oracle::uniform(1, 40));
        const Rational c(oracle::uniform(-50, 50), oracle::uniform(1, 40));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (b.sign() != 0) CHECK((a / b) * b == a);
        CHECK(((a < b) == (a.to_double() < b.to_double()) || a == b));
    }
}

TEST_CASE("rational overflow is reported") {
    const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
    CHECK_THROWS_AS((void)(big * big), std::overflow_error);
}

TEST_CASE("quadratic numbers are canonical") {
    CHECK(QuadraticNumber(Rational(1), Rational(1), Rational(4)) == QuadraticNumber(Rational(3)));
    CHECK(QuadraticNumber(Rational(0), Rational(1), Rational(8)) ==
          QuadraticNumber(Rational(0), Rational(2), Rational(2)));
    CHECK(QuadraticNumber(Rational(0), Rational(1), Rational(1, 2)) ==
          QuadraticNumber(Rational(0), Rational(1, 2), Rational(2)));
    CHECK(QuadraticNumber(Rational(0), Rational(1), Rational(3)).squarefree_radicand() == 3);
    CHECK(QuadraticNumber(Rational(-2), Rational(1), Rational(6)).to_string() == "-2+sqrt(6)");
    CHECK(QuadraticNumber(Rational(1), Rational(1), Rational(2)) != QuadraticNumber(Rational(1), Rational(1), Rational(3)));
}

TEST_CASE("quadratic sign against floating point") {
    for (int i = 0; i < 500; ++i) {
        const Rational a(oracle::uniform(-30, 30), oracle::uniform(1, 9));
        const Rational b(oracle::uniform(-30, 30), oracle::uniform(1, 9));
        const Rational q(oracle::uniform(0, 60), oracle::uniform(1, 9));
        const QuadraticNumber x(a, b, q);
        const double value = a.to_double() + b.to_double() * std::sqrt(q.to_double());
        if (std::abs(value) > 1e-9) CHECK(x.sign() == (value > 0 ? 1 : -1));
    }
    CHECK(QuadraticNumber(Rational(-3), Rational(1), Rational(9)).sign() == 0);
    CHECK(compare_to_surd(Rational(1), Rational(-7, 2), 1, Rational(81, 4)) == 0);
    CHECK(compare_to_surd(Rational(0), Rational(-2), 1, Rational(6)) < 0);
}
