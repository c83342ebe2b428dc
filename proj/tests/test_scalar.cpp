#include "hoalg/scalar.hpp"

#include <doctest.h>

using hoalg::Error;
using hoalg::parse_scalar;
using hoalg::Scalar;

TEST_SUITE("scalar")
{
    TEST_CASE("parses integers and fractions into lowest terms")
    {
        CHECK(parse_scalar("3") == 3);
        CHECK(parse_scalar("-7") == -7);
        CHECK(parse_scalar("+2") == 2);
        CHECK(parse_scalar("2/4") == Scalar(1, 2));
        CHECK(parse_scalar("-6/9") == Scalar(-2, 3));
        CHECK(parse_scalar("123456789012345678901234567890/2") == Scalar("61728394506172839450617283945"));
    }

    TEST_CASE("rejects malformed input")
    {
        CHECK_THROWS_AS(parse_scalar(""), Error);
        CHECK_THROWS_AS(parse_scalar("1/0"), Error);
        CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
        CHECK_THROWS_AS(parse_scalar("0.5"), Error);
        CHECK_THROWS_AS(parse_scalar("1/2/3"), Error);
        CHECK_THROWS_AS(parse_scalar("x"), Error);
        CHECK_THROWS_AS(parse_scalar("-"), Error);
    }

    TEST_CASE("prints without a unit denominator")
    {
        CHECK(hoalg::to_string(Scalar(4)) == "4");
        CHECK(hoalg::to_string(Scalar(-1, 2)) == "-1/2");
        for (const char* text : {"0", "5", "-5", "7/3", "-11/4"})
            CHECK(hoalg::to_string(parse_scalar(text)) == text);
    }

    TEST_CASE("sign_power")
    {
        CHECK(hoalg::sign_power(0) == 1);
        CHECK(hoalg::sign_power(3) == -1);
        CHECK(hoalg::sign_power(-3) == -1);
        CHECK(hoalg::sign_power(-4) == 1);
    }
}
