#include <catch2/catch_amalgamated.hpp>

#include <mdz/rational.hpp>

using namespace mdz;

TEST_CASE("rationals are canonical and exact") {
    CHECK(rat(3, 6) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat_str(rat(3, 6)) == "1/2");
    CHECK(rat_str(rat(4, 2)) == "2");
    CHECK(rat_str(rat(-7, 4)) == "-7/4");
    CHECK(rat_parse("22/7") == rat(22, 7));
    CHECK(rat_parse("-5") == rat(-5));
    CHECK_THROWS(rat(1, 0));
    CHECK_THROWS(rat_parse("1/0"));

    // exactness: (1/3)*3 == 1 with no drift
    Rational x = rat(1, 3);
    CHECK(x * 3 == 1);
}

TEST_CASE("pow2q handles negative exponents") {
    CHECK(pow2q(0) == 1);
    CHECK(pow2q(10) == 1024);
    CHECK(pow2q(-3) == rat(1, 8));
    CHECK(pow2q(-1) * pow2q(1) == 1);
}

TEST_CASE("binom with out-of-range convention") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(4, 5) == 0);
    CHECK(binom(4, -1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(40, 20) == Integer("137846528820"));
}
