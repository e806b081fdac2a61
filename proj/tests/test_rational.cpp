// tests/test_rational.cpp — floor/ceil semantics and the string round trip.
#include "orbirr/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace orbirr;

TEST_CASE("floor and ceiling on exact rationals") {
    REQUIRE(rat_floor(Rat(7, 2)) == 3);
    REQUIRE(rat_ceil(Rat(7, 2)) == 4);
    REQUIRE(rat_floor(Rat(-7, 2)) == -4);
    REQUIRE(rat_ceil(Rat(-7, 2)) == -3);
    REQUIRE(rat_floor(Rat(5)) == 5);
    REQUIRE(rat_ceil(Rat(5)) == 5);
    REQUIRE(rat_floor(Rat(-3)) == -3);
    REQUIRE(rat_ceil(Rat(-3)) == -3);
    REQUIRE(rat_floor(Rat(0)) == 0);
    REQUIRE(rat_ceil(Rat(0)) == 0);
}

TEST_CASE("floor/ceil properties on a dense grid") {
    for (long p = -50; p <= 50; ++p) {
        for (long q = 1; q <= 12; ++q) {
            const Rat x(p, q);
            const Int f = rat_floor(x);
            REQUIRE(Rat(f) <= x);
            REQUIRE(x < Rat(f + 1));
            REQUIRE(rat_ceil(x) == -rat_floor(-x));
            REQUIRE(rat_ceil(x) - rat_floor(x) == (denominator(x) == 1 ? 0 : 1));
        }
    }
}

TEST_CASE("string round trips normalize") {
    REQUIRE(rat_to_string(rat_from_string("-7/8")) == "-7/8");
    REQUIRE(rat_to_string(rat_from_string("5")) == "5");
    REQUIRE(rat_to_string(rat_from_string("+5")) == "5");
    REQUIRE(rat_to_string(rat_from_string("25/4")) == "25/4");
    REQUIRE(rat_to_string(rat_from_string("-3")) == "-3");
    REQUIRE(rat_to_string(rat_from_string("6/4")) == "3/2");
    REQUIRE(rat_from_string("6/4") == Rat(3, 2));
    REQUIRE(rat_from_string("0/7") == Rat(0));
}

TEST_CASE("malformed rational strings are rejected") {
    REQUIRE_THROWS_AS(rat_from_string("x/2"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string(""), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1/2/3"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("/2"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("2/"), std::invalid_argument);
}
