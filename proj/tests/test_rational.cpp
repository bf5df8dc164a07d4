#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gpcircle/rational.hpp"

using namespace gpc;

TEST_CASE("int_sqrt on small and large inputs") {
    CHECK(int_sqrt(Int(0)) == Int(0));
    CHECK(int_sqrt(Int(196)) == Int(14));
    CHECK_FALSE(int_sqrt(Int(2)).has_value());
    CHECK_FALSE(int_sqrt(Int(195)).has_value());
    CHECK_THROWS_AS(int_sqrt(Int(-1)), std::invalid_argument);

    Int big("100000000000000000000000000000000000000000000000003");
    CHECK(int_sqrt(big * big) == big);
    CHECK_FALSE(int_sqrt(big * big + 1).has_value());
    CHECK_FALSE(int_sqrt(big * big - 1).has_value());
}

TEST_CASE("int_sqrt agrees with a floor-sqrt oracle up to 10^6") {
    for (long n = 0; n <= 1000000; ++n) {
        long root = std::lround(std::floor(std::sqrt(static_cast<double>(n))));
        while (root * root > n) --root;
        while ((root + 1) * (root + 1) <= n) ++root;
        bool is_square = root * root == n;
        auto got = int_sqrt(Int(n));
        REQUIRE(got.has_value() == is_square);
        if (got) REQUIRE(*got == root);
    }
}

TEST_CASE("rat_sqrt examples") {
    CHECK(rat_sqrt(make_rat(196, 729)) == make_rat(14, 27));
    CHECK(rat_sqrt(Rat(1)) == Rat(1));
    CHECK(rat_sqrt(Rat(0)) == Rat(0));
    CHECK_FALSE(rat_sqrt(Rat(-4)).has_value());
    CHECK_FALSE(rat_sqrt(make_rat(3, 4)).has_value());
    CHECK_FALSE(rat_sqrt(make_rat(4, 3)).has_value());
}

TEST_CASE("rat_sqrt of random squares round-trips exactly") {
    std::mt19937_64 rng(20240701);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rat q = make_rat(num(rng), den(rng));
        auto s = rat_sqrt(q * q);
        REQUIRE(s.has_value());
        CHECK(*s * *s == q * q);
        CHECK(*s >= 0);
    }
}

TEST_CASE("solve_quadratic examples") {
    auto roots = solve_quadratic({Rat(12), Rat(-25), Rat(12)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == make_rat(3, 4));
    CHECK(roots[1] == make_rat(4, 3));
    CHECK(Rat(12) * roots[1] * roots[1] - Rat(25) * roots[1] + Rat(12) == 0);

    roots = solve_quadratic({Rat(1), Rat(-2), Rat(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 1);
    CHECK(roots[1] == 1);

    CHECK(solve_quadratic({Rat(1), Rat(0), Rat(1)}).empty());
    CHECK(solve_quadratic({Rat(1), Rat(0), Rat(-2)}).empty());  // irrational roots
    CHECK_THROWS_AS(solve_quadratic({Rat(0), Rat(1), Rat(1)}), std::invalid_argument);
}

TEST_CASE("solve_quadratic returns exact roots of constructed equations") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int i = 0; i < 300; ++i) {
        Rat r1 = make_rat(coeff(rng), den(rng));
        Rat r2 = make_rat(coeff(rng), den(rng));
        Rat a = make_rat(coeff(rng), den(rng));
        if (a == 0) continue;
        // a (s - r1)(s - r2)
        QuadraticQ eq{a, -a * (r1 + r2), a * r1 * r2};
        auto roots = solve_quadratic(eq);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == std::min(r1, r2));
        CHECK(roots[1] == std::max(r1, r2));
        for (const auto& s : roots) CHECK(eq.A * s * s + eq.B * s + eq.C == 0);
    }
}

TEST_CASE("quadratics with equal leading and constant coefficient have reciprocal roots") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    int found = 0;
    for (int i = 0; i < 300; ++i) {
        Rat a = make_rat(coeff(rng), den(rng));
        Rat s = make_rat(coeff(rng), den(rng));
        if (a == 0 || s == 0) continue;
        // A = C forces root product 1; build from a known root pair {s, 1/s}
        auto roots = solve_quadratic({a, -a * (s + 1 / s), a});
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] * roots[1] == 1);
        ++found;
    }
    CHECK(found >= 250);
}

TEST_CASE("rational parsing and serialization") {
    CHECK(to_string(parse_rat("5/3")) == "5/3");
    CHECK(to_string(parse_rat("-6/4")) == "-3/2");
    CHECK(to_string(parse_rat("7")) == "7");
    CHECK(to_string(parse_rat("-0")) == "0");
    CHECK(to_string(parse_rat("21/7")) == "3");
    CHECK(parse_rat("554537833/229516311") == make_rat(554537833, 229516311));

    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(" 1"), std::invalid_argument);
}

TEST_CASE("make_rat normalizes sign and reduces") {
    Rat q = make_rat(6, -21);
    CHECK(rat_num(q) == -2);
    CHECK(rat_den(q) == 7);
    CHECK(is_integer(make_rat(-9, 3)));
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}
