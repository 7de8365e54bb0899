#include "swiper/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace swiper;

TEST_CASE("parse_rational handles decimals, exponents and fractions") {
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("8.47e8") == Rational(847000000));
    CHECK(parse_rational("1/3") == Rational(1, 3));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("  2/6 ") == Rational(1, 3));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("12.") == Rational(12));
    CHECK(parse_rational("2.52e19") == Rational(BigInt("25200000000000000000")));
}

TEST_CASE("parse_rational is exact, never a float round") {
    CHECK(parse_rational("0.1") * 10 == Rational(1));
    CHECK(parse_rational("0.333") == Rational(333, 1000));
    CHECK(parse_rational("0.333") != Rational(1, 3));
}

TEST_CASE("parse_rational rejects malformed literals") {
    for (const char* bad : {"", "abc", "1.2.3", "1/", "/3", "1/0", "1e", "0x10", "1 2", "e5"}) {
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("parse_weight rejects negatives") {
    CHECK(parse_weight("0") == Rational(0));
    CHECK_THROWS_AS(parse_weight("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("-0.5"), std::invalid_argument);
}

TEST_CASE("floor and ceil are exact on both signs") {
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(4)) == 4);
    CHECK(rational_ceil(Rational(7, 2)) == 4);
    CHECK(rational_ceil(Rational(-7, 2)) == -3);
    CHECK(rational_ceil(Rational(4)) == 4);
}

TEST_CASE("to_string round-trips through parse_rational") {
    for (const char* text : {"1/3", "22/7", "-5/8", "1000000", "0"}) {
        const Rational r = parse_rational(text);
        CHECK(parse_rational(to_string(r)) == r);
    }
}

TEST_CASE("decimal rendering is exact with half-up rounding") {
    CHECK(to_decimal_string(Rational(32, 9), 2) == "3.56");
    CHECK(to_decimal_string(Rational(16, 9), 2) == "1.78");
    CHECK(to_decimal_string(Rational(64, 9), 2) == "7.11");
    CHECK(to_decimal_string(Rational(1, 2), 0) == "1");  // half rounds up
    CHECK(to_decimal_string(Rational(-1, 8), 2) == "-0.13");
}

TEST_CASE("csv numbers terminate when the denominator allows") {
    CHECK(to_csv_number(Rational(3, 20)) == "0.15");
    CHECK(to_csv_number(Rational(7)) == "7");
    CHECK(to_csv_number(Rational(1, 3)) == "1/3");
    CHECK(to_csv_number(Rational(7, 4)) == "1.75");
}
