#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <unordered_set>

#include "hoops/random.hpp"
#include "hoops/rational.hpp"

using hoops::Rational;

TEST_CASE("rationals normalize and reduce") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons cross-multiply without overflow") {
    Rational big(INT64_MAX, 3), other(INT64_MAX, 2);
    CHECK(big < other);
    CHECK(other > big);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 2) <= Rational(2, 4));
    CHECK(Rational(2, 3) > Rational(1, 2));
}

TEST_CASE("overflow guard throws instead of wrapping") {
    Rational huge(INT64_MAX, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
}

TEST_CASE("string round trips") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("x/y"), hoops::error);
    CHECK_THROWS_AS(Rational::parse("1/2junk"), hoops::error);
}

TEST_CASE("hashable") {
    std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
    CHECK(s.size() == 2);
}

TEST_CASE("property: field laws on random small rationals") {
    hoops::DrawRng rng(2024, 0);
    for (int i = 0; i < 2000; ++i) {
        Rational a = rng.rational(20), b = rng.rational(20), c = rng.rational(20);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
