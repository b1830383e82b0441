#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/periods.hpp>

using namespace mirrorkit;

TEST_CASE("apery sequence", "[periods]")
{
    CHECK(apery_gamma1_5(0) == 1);
    // direct summation oracles
    CHECK(apery_gamma1_5(1) == 3);
    CHECK(apery_gamma1_5(2) == 19);
    CHECK(apery_gamma1_5(3) == 147);
    for (long d = 0; d <= 12; ++d) CHECK(apery_gamma1_5(d) > 0);
}

TEST_CASE("period_x0 coefficients", "[periods]")
{
    auto p = period_x0(6);
    CHECK(p.coeff({0}) == 1);
    CHECK(p.coeff({1}) == 9);
    CHECK(p.coeff({2}) == 361);
}

TEST_CASE("period_x1 coefficients and symmetry", "[periods]")
{
    auto w = period_x1(8);
    CHECK(w.coeff({0, 0}) == 1);
    CHECK(w.coeff({1, 0}) == 3);
    CHECK(w.coeff({1, 1}) == 152);

    // equals the Hadamard product by construction; check against the
    // explicit closed form too
    for (int d1 = 0; d1 <= 4; ++d1)
        for (int d2 = 0; d1 + d2 <= 4; ++d2) {
            Integer t = factorial(d1 + d2), b = factorial(d1) * factorial(d2);
            Rational expect = Rational(apery_gamma1_5(d1 + d2)) * Rational(t * t * t, b * b * b);
            REQUIRE(w.coeff({d1, d2}) == expect);
        }

    CHECK(w.swapped(0, 1) == w);

    // restriction z2 = 0 is the univariate Apery series
    auto r = w.at_zero(1);
    for (int d = 0; d <= 8; ++d) CHECK(r.coeff({d, 0}) == Rational(apery_gamma1_5(d)));
}

TEST_CASE("period at [0,1,0]", "[periods]")
{
    auto w = period_x1_lcs010(8);
    CHECK(w.coeff({0, 0}) == 1);
    CHECK(w.coeff({1, 0}) == 3);
    CHECK(w.coeff({0, 1}) == 1);
    CHECK(w.swapped(0, 1) != w); // genuinely asymmetric
}
