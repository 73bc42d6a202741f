#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "symchar/exact.hpp"
#include "symchar/h_poly.hpp"
#include "symchar/rat_poly.hpp"

using namespace symchar;

TEST_CASE("binomial") {
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(-5), 0) == 1);
    CHECK(binomial(Int(0), 0) == 1);
    CHECK(binomial(Int(7), 0) == 1);
    CHECK(binomial(Int(3), -1) == 0);
    CHECK(binomial(Int(-2), 3) == -4); // (-2)(-3)(-4)/6
    CHECK(binomial(Int(40), 20) == Int("137846528820"));
}

TEST_CASE("binomial Pascal identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int a = static_cast<int>(rng() % 41) - 20;
        int b = static_cast<int>(rng() % 11);
        CHECK(binomial(Int(a), b) == binomial(Int(a - 1), b - 1) + binomial(Int(a - 1), b));
    }
}

TEST_CASE("rationals") {
    CHECK(to_string(make_rat(Int(3), Int(6))) == "1/2");
    CHECK(to_string(make_rat(Int(1), Int(-2))) == "-1/2");
    CHECK(to_string(make_rat(Int(-4), Int(2))) == "-2");
    CHECK_THROWS_AS(make_rat(Int(1), Int(0)), DomainError);
    CHECK(to_string(Int(-17)) == "-17");
}

TEST_CASE("binomial_poly examples") {
    CHECK(binomial_poly(0, 1).to_string() == "n");
    CHECK(binomial_poly(1, 1).to_string() == "1 + n");
    RatPoly half_square = binomial_poly(1, 2); // (n+1)n/2
    CHECK(half_square.coeffs() == std::vector<Rat>{Rat(0), make_rat(1, 2), make_rat(1, 2)});
    for (int n : {1, 2, 3}) CHECK(half_square.evaluate(Int(n)) == Rat(binomial(Int(n + 1), 2)));
    CHECK(binomial_poly(3, 0).to_string() == "1");
    CHECK(binomial_poly(0, -1).is_zero());
}

TEST_CASE("binomial_poly agrees with binomial at random integers") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int offset = static_cast<int>(rng() % 21) - 10;
        int b = static_cast<int>(rng() % 9);
        int n = static_cast<int>(rng() % 201) - 100;
        CHECK(binomial_poly(offset, b).evaluate(Int(n)) == Rat(binomial(Int(n + offset), b)));
    }
}

TEST_CASE("rat poly arithmetic and rendering") {
    RatPoly zero;
    CHECK(zero.to_string() == "0");
    CHECK(zero.degree() == -1);
    RatPoly p({Rat(-2), Rat(1)});
    CHECK(p.to_string() == "-2 + n");
    CHECK((p * p).to_string() == "4 - 4*n + n^2");
    CHECK((p - p).is_zero());
    CHECK((-p).to_string() == "2 - n");
    CHECK(RatPoly({make_rat(1, 2)}).to_string() == "1/2");
    CHECK(RatPoly({Rat(0), Rat(0), Rat(3)}).to_string() == "3*n^2");
    CHECK(RatPoly::variable().evaluate(Int(17)) == 17);
    // trailing zeros trim
    CHECK(RatPoly({Rat(1), Rat(0)}).degree() == 0);
}

TEST_CASE("ratpoly_interpolate") {
    CHECK(ratpoly_interpolate({{Int(0), Rat(1)}, {Int(1), Rat(2)}}).to_string() == "1 + n");
    CHECK(ratpoly_interpolate({{Int(0), Rat(0)}, {Int(1), Rat(1)}, {Int(2), Rat(4)}})
              .to_string() == "n^2");
    RatPoly constant = ratpoly_interpolate({{Int(5), Rat(7)}});
    CHECK(constant.to_string() == "7");
    CHECK_THROWS_AS(ratpoly_interpolate({{Int(1), Rat(1)}, {Int(1), Rat(2)}}), DomainError);
    CHECK_THROWS_AS(ratpoly_interpolate({}), DomainError);
}

TEST_CASE("ratpoly_interpolate reproduces its nodes exactly") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::pair<Int, Rat>> points;
        int count = 1 + rng() % 6;
        for (int i = 0; i < count; ++i) {
            Int num = static_cast<int>(rng() % 41) - 20;
            Int den = 1 + static_cast<int>(rng() % 9);
            points.emplace_back(Int(10 * i + static_cast<int>(rng() % 10)), make_rat(num, den));
        }
        RatPoly p = ratpoly_interpolate(points);
        for (const auto& [x, y] : points) CHECK(p.evaluate(x) == y);
    }
}

TEST_CASE("h generators") {
    CHECK(HPoly::generator(2).to_string() == "h2");
    CHECK(HPoly::generator(2).term_count() == 1);
    CHECK(HPoly::generator(0) == HPoly::one());
    CHECK(HPoly::generator(-3).is_zero());
    CHECK(HPoly::one().to_string() == "1");
    CHECK(HPoly::zero().to_string() == "0");
    CHECK(HPoly::term({2, 0}, 0).is_zero());
    CHECK_THROWS_AS(HPoly::term({-1}, 1), DomainError);
}

TEST_CASE("h poly rendering") {
    HPoly p = HPoly::generator(1) * HPoly::generator(2) - HPoly::generator(3);
    CHECK(p.to_string() == "h1*h2 - h3");
    CHECK((HPoly::generator(1) * HPoly::generator(1) * Int(2)).to_string() == "2*h1^2");
    CHECK((HPoly::constant(-1) - HPoly::generator(2)).to_string() == "-h2 - 1");
}

TEST_CASE("hpoly_det examples") {
    std::vector<std::vector<HPoly>> m{{HPoly::generator(2), HPoly::generator(3)},
                                      {HPoly::one(), HPoly::generator(1)}};
    CHECK(hpoly_det(m) == HPoly::generator(1) * HPoly::generator(2) - HPoly::generator(3));
    HPoly x = HPoly::generator(4) + HPoly::constant(2);
    CHECK(hpoly_det({{x}}) == x);
    CHECK(hpoly_det({}) == HPoly::one());
    CHECK_THROWS_AS(hpoly_det({{HPoly::one(), HPoly::one()}}), DomainError);
}

namespace {

HPoly random_hpoly(std::mt19937& rng, int max_terms = 8) {
    HPoly p;
    int terms = 1 + rng() % max_terms;
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(1 + rng() % 4);
        for (auto& e : exps) e = rng() % 4;
        int c = static_cast<int>(rng() % 19) - 9;
        p += HPoly::term(exps, c);
    }
    return p;
}

} // namespace

TEST_CASE("h ring axioms on random operands") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        HPoly a = random_hpoly(rng);
        HPoly b = random_hpoly(rng);
        HPoly c = random_hpoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + HPoly::zero() == a);
        CHECK(a * HPoly::one() == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("determinant of a triangular matrix is the diagonal product") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + rng() % 4;
        std::vector<std::vector<HPoly>> m(d, std::vector<HPoly>(d));
        HPoly expected = HPoly::one();
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) m[i][j] = random_hpoly(rng, 3);
            expected = expected * m[i][i];
        }
        CHECK(hpoly_det(m) == expected);
    }
}
