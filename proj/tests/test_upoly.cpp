#include <random>

#include "doctest.h"
#include "hallkit/upoly.hpp"

using namespace hallkit;

namespace {
RatPoly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RatPoly(v);
}
}  // namespace

TEST_CASE("exact polynomial arithmetic") {
    CHECK(P({1, 1}) * P({-1, 1}) == P({-1, 0, 1}));
    CHECK(P({1, 1, 1}).eval(2L) == 7);
    CHECK(P({1, 1}).compose_power(2) == P({1, 0, 1}));
    CHECK((P({1, 2}) - P({1, 2})).is_zero());
    CHECK(P({1, 0, 2, 2}).to_string() == "2T^3+2T^2+1");
    CHECK((P({0, -1, 1}) * Rational(1, 2)).to_string() == "1/2T^2-1/2T");
    CHECK(RatPoly().to_string() == "0");
    CHECK(P({-1}).to_string() == "-1");
}

TEST_CASE("machine form round-trips") {
    RatPoly p = P({0, -1, 1}) * Rational(1, 2);
    CHECK(p.to_strings() == std::vector<std::string>{"0/1", "-1/2", "1/2"});
    CHECK(RatPoly::from_strings(p.to_strings()) == p);
    CHECK_THROWS_AS(rational_from_string("x"), InputError);
    CHECK(rational_pow(3, -2) == Rational(1, 9));
}

TEST_CASE("interpolation") {
    CHECK(interpolate({{2, 7}, {3, 13}, {5, 31}}, 2) == P({1, 1, 1}));
    CHECK(interpolate({{2, 5}, {3, 5}}, 0) == P({5}));
    CHECK_THROWS_AS(interpolate({{2, 1}, {3, 2}, {5, 3}}, 1), VerificationError);
    CHECK_THROWS_AS(interpolate({{2, 1}}, 1), InputError);
    CHECK_THROWS_AS(interpolate({{2, 1}, {2, 1}}, 1), InputError);
    CHECK(interpolate({{2, 0}, {3, 0}}, -1).is_zero());
    CHECK_THROWS_AS(interpolate({{2, 1}}, -1), VerificationError);
}

TEST_CASE("interpolation reproduces random rational polynomials exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-20, 20), den(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const int deg = trial % 6;
        std::vector<Rational> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng), den(rng));
        RatPoly p(v);
        std::vector<Sample> s;
        for (long x : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L}) s.push_back({x, p.eval(x)});
        auto r = interpolate(s, deg);
        CHECK(r == p);
        for (const auto& smp : s) CHECK(r.eval(smp.point) == smp.value);
        // one extra sample never changes the answer
        s.push_back({13, p.eval(13L)});
        CHECK(interpolate(s, deg) == r);
    }
}

TEST_CASE("integrality") {
    CHECK(is_integer_poly(P({1, 1, 1})));
    CHECK_FALSE(is_integer_poly(P({0, -1, 1}) * Rational(1, 2)));
    CHECK(is_integer_poly(RatPoly()));
}
