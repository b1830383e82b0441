#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/fit.hpp>
#include <mirrorkit/picard_fuchs.hpp>

using namespace mirrorkit;

namespace {

struct Rng {
    unsigned long long state = 0x853c49e6748fea9bull;
    unsigned long long next()
    {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    int int_in(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

ThetaOperator random_op(Rng& rng, const std::vector<std::string>& vars)
{
    ThetaOperator op(vars);
    int terms = rng.int_in(1, 4);
    for (int t = 0; t < terms; ++t) {
        Mono th(vars.size()), e(vars.size());
        for (auto& x : th) x = rng.int_in(0, 2);
        for (auto& x : e) x = rng.int_in(0, 2);
        op.add_term(th, e, rng.int_in(-5, 5));
    }
    return op;
}

TruncatedSeries random_series(Rng& rng, const std::vector<std::string>& vars, int cap)
{
    TruncatedSeries s(vars, cap);
    for (int t = 0; t < 8; ++t) {
        Mono m(vars.size());
        int deg = rng.int_in(0, cap);
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            m[i] = rng.int_in(0, deg);
            deg -= m[i];
        }
        m.back() = deg;
        s.set(m, Rational(rng.int_in(-9, 9), rng.int_in(1, 5)));
    }
    return s;
}

} // namespace

TEST_CASE("theta action on monomials", "[theta]")
{
    ThetaOperator th1({"x1", "x2"});
    th1.add_term({1, 0}, {0, 0}, 1);
    auto x1 = TruncatedSeries::variable({"x1", "x2"}, 4, 0);
    CHECK(th1.apply(x1) == x1.truncated(4));

    auto p2 = picard_fuchs_p2(); // z1 th2^3 - z2 th1^3
    TruncatedSeries s({"z1", "z2"}, 4);
    s.set({1, 1}, 1);
    auto r = p2.apply(s);
    CHECK(r.coeff({2, 1}) == 1);
    CHECK(r.coeff({1, 2}) == -1);
}

TEST_CASE("annihilation of the two-parameter period", "[theta]")
{
    auto w0 = period_x1(12);
    CHECK(annihilates(picard_fuchs_p1(), w0, 11).annihilates);
    CHECK(annihilates(picard_fuchs_p2(), w0, 11).annihilates);

    ThetaOperator th1({"z1", "z2"});
    th1.add_term({1, 0}, {0, 0}, 1);
    auto bad = annihilates(th1, w0, 4);
    CHECK_FALSE(bad.annihilates);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure == Mono{1, 0});
}

TEST_CASE("composition matches sequential application", "[theta]")
{
    Rng rng;
    const std::vector<std::string> vars{"z1", "z2"};
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_op(rng, vars);
        auto b = random_op(rng, vars);
        auto s = random_series(rng, vars, 8);
        auto lhs = compose(a, b).apply(s);
        auto rhs = a.apply(b.apply(s));
        int cap = std::min(lhs.cap(), rhs.cap());
        REQUIRE(lhs.truncated(cap) == rhs.truncated(cap));
    }
}

TEST_CASE("conjugation by monomials", "[theta]")
{
    ThetaOperator th({"x"});
    th.add_term({1}, {0}, 1);
    auto conj = th.conjugate_by_monomial({1}); // x theta x^{-1} = theta - 1
    ThetaOperator expect({"x"});
    expect.add_term({1}, {0}, 1);
    expect.add_term({0}, {0}, -1);
    CHECK(conj == expect);

    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        auto op = random_op(rng, {"z1", "z2"});
        CHECK(op.conjugate_by_monomial({0, 0}) == op);
        Mono m{rng.int_in(-2, 2), rng.int_in(-2, 2)};
        Mono minv{-m[0], -m[1]};
        CHECK(op.conjugate_by_monomial(m).conjugate_by_monomial(minv) == op);
    }
}

TEST_CASE("torus coordinate change", "[theta]")
{
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        auto op = random_op(rng, {"z1", "z2"});
        auto same = op.change_torus_coordinates({{1, 0}, {0, 1}}, {1, 1}, {"z1", "z2"});
        CHECK(same == op);
    }

    // one-variable inversion x = 1/w turns theta_x into -theta_w
    ThetaOperator th({"x"});
    th.add_term({1}, {0}, 1);
    auto inv = th.change_torus_coordinates({{-1}}, {1}, {"w"});
    ThetaOperator expect({"w"});
    expect.add_term({1}, {0}, -1);
    CHECK(inv == expect);

    ThetaOperator bad({"x"});
    bad.add_term({1}, {0}, 1);
    CHECK_THROWS_AS(bad.change_torus_coordinates({{2}}, {1}, {"w"}), std::invalid_argument);
}

TEST_CASE("secondary chart operators annihilate the [0,1,0] period", "[theta]")
{
    auto chart = chart_010();
    auto ops = chart_operators(chart);
    auto period = chart.holomorphic_period(12);
    for (const auto& q : ops) {
        INFO(q.to_string());
        CHECK(annihilates(q, period, 11).annihilates);
    }
    auto chart2 = chart_001();
    auto ops2 = chart_operators(chart2);
    auto period2 = chart2.holomorphic_period(10);
    for (const auto& q : ops2) CHECK(annihilates(q, period2, 9).annihilates);
}

TEST_CASE("normalization is a fixpoint", "[theta]")
{
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        auto op = random_op(rng, {"z1", "z2"});
        if (op.is_zero()) continue;
        auto n1 = op.normalized();
        CHECK(n1.normalized() == n1);
    }
    CHECK(picard_fuchs_p1().normalized() == picard_fuchs_p1());
}

TEST_CASE("operator io round trip", "[theta]")
{
    auto p1 = picard_fuchs_p1();
    auto back = ThetaOperator::from_string(p1.to_string(), {"z1", "z2"});
    CHECK(back == p1);
}

TEST_CASE("fit recovers simple operators", "[theta]")
{
    // geometric series: (1-x) theta - x
    TruncatedSeries geo({"x"}, 12);
    for (int d = 0; d <= 12; ++d) geo.set({d}, 1);
    auto ops = fit_operator(geo, 1, 1);
    REQUIRE(ops.size() == 1);
    ThetaOperator expect({"x"});
    expect.add_term({1}, {0}, 1);
    expect.add_term({1}, {1}, -1);
    expect.add_term({0}, {1}, -1);
    CHECK(ops[0] == expect.normalized());
    CHECK(annihilates(ops[0], geo, 11).annihilates);

    // Gamma_1(5) elliptic operator from the Apery series
    auto ops2 = fit_operator(apery_series(20), 2, 2);
    REQUIRE(ops2.size() == 1);
    CHECK(ops2[0] == gamma1_5_operator().normalized());
}

TEST_CASE("fit error paths", "[theta]")
{
    // too few conditions for the requested shape
    CHECK_THROWS_AS(fit_operator(apery_series(6), 4, 4), std::runtime_error);
    // no operator of the requested shape
    CHECK_THROWS_AS(fit_operator(apery_series(20), 1, 1), std::runtime_error);
    // annihilation beyond the series cap is refused
    CHECK_THROWS_AS(annihilates(gamma1_5_operator(), apery_series(6), 7), std::invalid_argument);
}

TEST_CASE("fit recovers the two-parameter operator", "[theta]")
{
    auto w0 = period_x1(12);
    auto ops = fit_operator(w0, 2, 2);
    REQUIRE(ops.size() == 1);
    CHECK(annihilates(ops[0], w0, 10).annihilates);
    CHECK(ops[0] == picard_fuchs_p1().normalized());
}
