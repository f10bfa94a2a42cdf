#include <doctest.h>

#include <random>

#include "ghseries/errors.hpp"
#include "ghseries/rational.hpp"

using ghseries::InputError;
using ghseries::Rational;

TEST_CASE("parse accepts p/q and bare integers") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("+3/4") == Rational(3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0/1").is_zero());
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
}

TEST_CASE("parse rejects malformed text and zero denominators") {
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
    CHECK_THROWS_AS(Rational::parse("/2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), InputError);
    CHECK_THROWS_AS(Rational::parse("-"), InputError);
}

TEST_CASE("values are kept in lowest terms with positive denominator") {
    const Rational r(mpz_class(10), mpz_class(-4));
    CHECK(r.numerator() == -5);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-5/2");
    CHECK((Rational(1, 3) + Rational(2, 3)).to_string() == "1");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(0), 0) == Rational(1));
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(20).to_string() == "2432902008176640000");
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("printed rationals parse back to the same value") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const long num = static_cast<long>(rng() % 2000001) - 1000000;
        const unsigned long den = rng() % 1000 + 1;
        Rational r(num, den);
        r = pow(r, rng() % 6);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("operation counters track arithmetic per thread") {
    ghseries::reset_op_counts();
    Rational a(1, 2);
    a += Rational(1);
    a *= Rational(3);
    a /= Rational(5);
    a -= Rational(1);
    const auto ops = ghseries::op_counts();
    CHECK(ops.add == 2);
    CHECK(ops.mul == 1);
    CHECK(ops.div == 1);
    CHECK(ops.total() == 4);
}
