#include "doctest.h"
#include "subpoly/rational.hpp"

using namespace subpoly;

TEST_CASE("parse_rat handles integers, fractions and decimals") {
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-3") == Rat(-3));
    CHECK(parse_rat("2/6") == Rat(1) / 3);
    CHECK(parse_rat("-8/20") == Rat(-2) / 5);
    CHECK(parse_rat("0.25") == Rat(1) / 4);
    CHECK(parse_rat("-1.5") == Rat(-3) / 2);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("rat_str is canonical") {
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_str(Rat(4) / 6) == "2/3");
    CHECK(rat_str(Rat(-1) / 2) == "-1/2");
    CHECK(rat_str(parse_rat(rat_str(Rat(22) / 7))) == "22/7");
}

TEST_CASE("powers") {
    CHECK(rat_pow(Rat(2) / 3, 3) == Rat(8) / 27);
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
    CHECK(int_pow(Int(2), 20) == Int(1048576));
    CHECK(int_pow(Int(10), 0) == Int(1));
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(7, 3) == Int(35));
    CHECK(binomial(6, 4) == Int(15));
    CHECK(binomial(5, 0) == Int(1));
    CHECK(binomial(4, 5) == Int(0));
    CHECK(factorial(0) == Int(1));
    CHECK(factorial(6) == Int(720));
    // Pascal identity on a grid.
    for (int n = 1; n < 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("parse_rat_list") {
    auto v = parse_rat_list({"1/2", "3", "0.2"});
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Rat(1) / 2);
    CHECK(v[1] == Rat(3));
    CHECK(v[2] == Rat(1) / 5);
}

TEST_CASE("exact arithmetic does not drift") {
    Rat x = 0;
    for (int i = 1; i <= 100; ++i) x += Rat(1) / i - Rat(1) / (i + 1);
    CHECK(x == Rat(100) / 101);
}
