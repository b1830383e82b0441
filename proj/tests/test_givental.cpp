#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/amodel.hpp>

using namespace mirrorkit;

namespace {
const AmbientX1& ambx1()
{
    static AmbientX1 amb;
    return amb;
}
} // namespace

TEST_CASE("projective J-function factors", "[givental]")
{
    auto p2 = ring_projective_space(2);
    auto h = p2.basis(1);

    // d = 0 is the identity
    auto j0 = j_projective_factor(p2, h, 0, 3);
    REQUIRE(j0.size() == 1);
    CHECK(j0.at(0) == p2.one());

    // d = 1: 1/(h+z)^3 = z^-3 - 3h z^-4 + 6h^2 z^-5
    auto j1 = j_projective_factor(p2, h, 1, 3);
    CHECK(j1.at(-3) == p2.one());
    CHECK(j1.at(-4) == Rational(-3) * h);
    CHECK(j1.at(-5) == Rational(6) * p2.basis(2));
    CHECK(j1.count(-6) == 0);

    // leading power of J_{d1,d2} on P2 x P2 is z^{-3(d1+d2)}
    const auto& amb = ambx1();
    for (int d1 = 0; d1 <= 2; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2) {
            if (d1 + d2 == 0) continue;
            auto j = zl_mul(amb.ring(), j_projective_factor(amb.ring(), amb.h[0], d1, 3),
                            j_projective_factor(amb.ring(), amb.h[1], d2, 3));
            int lead = j.begin()->first; // std::map: smallest key first
            bool found = false;
            for (const auto& [z, c] : j)
                if (z == -3 * (d1 + d2) && c.coord(0) != 0) found = true;
            CHECK(found);
            CHECK(lead >= -3 * (d1 + d2) - 4);
        }
}

TEST_CASE("grassmannian J-function and its convention", "[givental]")
{
    auto g25 = ring_grassmannian_2_5();
    auto j0 = grassmannian_j(g25, 0);
    REQUIRE(j0.size() == 1);
    CHECK(j0.at(0) == g25.one());

    // mandatory convention check (Gamma_1(5) series)
    assert_gamma1_5_convention(g25, 3);

    // A_1 = 3 seen directly at d = 1
    auto tw = twist_factor(g25, g25.basis(1), 1, 5);
    auto p = zl_mul(g25, tw, grassmannian_j(g25, 1));
    CHECK(p.at(0).coord(0) == 3);
}

TEST_CASE("X1 A-model reproduces the BPS table", "[givental]")
{
    AModelResult res = amodel_x1(ambx1(), 4);

    // z^0 component check is built into the I-function constructor; the
    // mirror map starts as q_a = x_a(1 + O(x))
    CHECK(res.mt.x_of_q[0].coeff({1, 0}) == 1);
    CHECK(res.mt.x_of_q[1].coeff({0, 1}) == 1);

    const std::map<Mono, Integer> expected = {
        {{0, 1}, 120},   {{1, 0}, 120},   {{1, 1}, 2085},  {{0, 2}, 105},
        {{2, 0}, 105},   {{1, 2}, 15690}, {{2, 1}, 15690}, {{0, 3}, 105},
        {{3, 0}, 105},   {{1, 3}, 83400}, {{3, 1}, 83400}, {{2, 2}, 569475},
        {{0, 4}, 120},   {{4, 0}, 120}};
    for (const auto& [m, v] : expected) {
        INFO("degree (" << m[0] << "," << m[1] << ")");
        REQUIRE(res.bps.count(m) == 1);
        CHECK(res.bps.at(m) == v);
    }

    // symmetry of the table
    for (const auto& [m, v] : res.bps) {
        Mono sw{m[1], m[0]};
        CHECK(res.bps.at(sw) == v);
    }

    // multi-cover structure: N_{(0,2)} = n_{(0,2)} + n_{(0,1)}/8
    CHECK(res.gw.at({0, 2}) == Rational(105) + Rational(120, 8));
    CHECK(res.gw.at({0, 2}) == 120);

    // forward check through gw_from_bps
    auto forward = gw_from_bps(res.bps, 4);
    for (const auto& [m, v] : res.gw) CHECK(forward.at(m) == v);
}

TEST_CASE("X0 A-model", "[givental]")
{
    AmbientX0 amb;
    AModelResult res = amodel_x0(amb, 4);
    // frozen from an independent prototype of the same pipeline
    CHECK(res.bps.at({1}) == 325);
    CHECK(res.bps.at({2}) == 3200);
    CHECK(res.bps.at({3}) == 66250);
    CHECK(res.bps.at({4}) == 1985000);
}
