#include <doctest.h>

#include <random>

#include "graphzeta/series.hpp"
#include "testutil.hpp"

using namespace graphzeta;
using test::rat;

TEST_CASE("exp of the zero series is 1") {
    CHECK(exp(TruncatedSeries(5)) == TruncatedSeries::one(5));
    CHECK(exp(TruncatedSeries(0)) == TruncatedSeries::one(0));
}

TEST_CASE("log(1/(1-t)) = t + t^2/2 + t^3/3 + t^4/4") {
    TruncatedSeries one_minus_t = TruncatedSeries::one(4);
    one_minus_t.set_coeff(1, rat(-1));
    const TruncatedSeries s = log(reciprocal(one_minus_t));
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == rat(1));
    CHECK(s.coeff(2) == rat(1, 2));
    CHECK(s.coeff(3) == rat(1, 3));
    CHECK(s.coeff(4) == rat(1, 4));
}

TEST_CASE("reciprocal(1 - 2t) is the geometric series") {
    TruncatedSeries s = TruncatedSeries::one(3);
    s.set_coeff(1, rat(-2));
    const TruncatedSeries r = reciprocal(s);
    CHECK(r.coeff(0) == rat(1));
    CHECK(r.coeff(1) == rat(2));
    CHECK(r.coeff(2) == rat(4));
    CHECK(r.coeff(3) == rat(8));
    CHECK((r * s) == TruncatedSeries::one(3));
}

TEST_CASE("preconditions on constant terms") {
    TruncatedSeries nonzero = TruncatedSeries::one(3);
    CHECK_THROWS_AS(exp(nonzero), std::domain_error);
    TruncatedSeries zero(3);
    CHECK_THROWS_AS(log(zero), std::domain_error);
    CHECK_THROWS_AS(reciprocal(zero), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
}

TEST_CASE("exp(log(f)) = f for random unit series") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 9);
        TruncatedSeries f = TruncatedSeries::one(order);
        for (int k = 1; k <= order; ++k) f.set_coeff(k, test::random_rational(rng));
        CHECK(exp(log(f)) == f);
        CHECK(log(exp(log(f))) == log(f));
    }
}

TEST_CASE("multiplication truncates to the shared order") {
    TruncatedSeries a = TruncatedSeries::one(5);
    a.set_coeff(1, rat(1));
    TruncatedSeries b = TruncatedSeries::one(2);
    const TruncatedSeries p = a * b;
    CHECK(p.order() == 2);
    CHECK(p.coeff(1) == rat(1));
    CHECK(a.agrees_with(b) == false);
    CHECK(p.agrees_with(a));
}
