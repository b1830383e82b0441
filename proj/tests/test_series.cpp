#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/periods.hpp>
#include <mirrorkit/series.hpp>

using namespace mirrorkit;

namespace {

// Deterministic LCG so property tests are reproducible.
struct Rng {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    unsigned long long next()
    {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    int int_in(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
    Rational rational()
    {
        int n = int_in(-9, 9);
        int d = int_in(1, 7);
        return Rational(n, d);
    }
};

TruncatedSeries random_series(Rng& rng, const std::vector<std::string>& vars, int cap, bool unit)
{
    TruncatedSeries s(vars, cap);
    int terms = rng.int_in(3, 10);
    for (int t = 0; t < terms; ++t) {
        Mono m(vars.size());
        int deg = rng.int_in(0, cap);
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            m[i] = rng.int_in(0, deg);
            deg -= m[i];
        }
        m.back() = deg;
        s.set(m, rng.rational());
    }
    Mono zero(vars.size(), 0);
    if (unit && s.coeff(zero) == 0) s.set(zero, 1);
    return s;
}

} // namespace

TEST_CASE("addition basics", "[series]")
{
    TruncatedSeries a({"x"}, 4);
    a.set({0}, 1);
    a.set({1}, 3);
    TruncatedSeries b({"x"}, 4);
    b.set({1}, 2);
    auto c = a + b;
    CHECK(c.coeff({0}) == 1);
    CHECK(c.coeff({1}) == 5);

    auto zero = TruncatedSeries({"x"}, 4);
    CHECK(a + zero == a);

    TruncatedSeries u({"x1", "x2"}, 3), v({"x1", "x2"}, 3);
    u.set({1, 0}, 1);
    v.set({0, 1}, 1);
    auto w = u + v;
    CHECK(w.coeff({1, 0}) == 1);
    CHECK(w.coeff({0, 1}) == 1);

    TruncatedSeries other({"y"}, 4);
    CHECK_THROWS_AS(a + other, std::invalid_argument);
}

TEST_CASE("multiplication basics", "[series]")
{
    TruncatedSeries p({"x"}, 2), q({"x"}, 2);
    p.set({0}, 1);
    p.set({1}, 1);
    q.set({0}, 1);
    q.set({1}, -1);
    auto r = p * q;
    CHECK(r.coeff({0}) == 1);
    CHECK(r.coeff({1}) == 0);
    CHECK(r.coeff({2}) == -1);

    Rng rng;
    auto a = random_series(rng, {"x"}, 5, false);
    CHECK(a * TruncatedSeries::one({"x"}, 5) == a);

    // (1+x1+x2)^2 at cap 1 keeps only the linear part
    TruncatedSeries s({"x1", "x2"}, 1);
    s.set({0, 0}, 1);
    s.set({1, 0}, 1);
    s.set({0, 1}, 1);
    auto t = s * s;
    CHECK(t.coeff({0, 0}) == 1);
    CHECK(t.coeff({1, 0}) == 2);
    CHECK(t.coeff({0, 1}) == 2);
    CHECK(t.cap() == 1);
}

TEST_CASE("reciprocal", "[series]")
{
    TruncatedSeries f({"x"}, 3);
    f.set({0}, 1);
    f.set({1}, -1);
    auto g = reciprocal(f); // geometric series
    for (int d = 0; d <= 3; ++d) CHECK(g.coeff({d}) == 1);

    CHECK(reciprocal(TruncatedSeries::one({"x"}, 3)) == TruncatedSeries::one({"x"}, 3));

    // verified by multiplying back
    TruncatedSeries h({"x1", "x2"}, 2);
    h.set({0, 0}, 1);
    h.set({1, 0}, 3);
    auto hi = reciprocal(h);
    CHECK(hi.coeff({0, 0}) == 1);
    CHECK(hi.coeff({1, 0}) == -3);
    CHECK(hi.coeff({2, 0}) == 9);
    CHECK(h * hi == TruncatedSeries::one({"x1", "x2"}, 2));

    TruncatedSeries z({"x"}, 2);
    z.set({1}, 1);
    CHECK_THROWS_AS(reciprocal(z), std::invalid_argument);
}

TEST_CASE("ring axioms on random series", "[series]")
{
    Rng rng;
    const std::vector<std::string> vars{"x1", "x2"};
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_series(rng, vars, 6, false);
        auto b = random_series(rng, vars, 6, false);
        auto c = random_series(rng, vars, 6, false);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a + b == b + a);
    }
}

TEST_CASE("reciprocal round trip on random unit series", "[series]")
{
    Rng rng;
    const std::vector<std::string> vars{"x1", "x2"};
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_series(rng, vars, 6, true);
        REQUIRE(a * reciprocal(a) == TruncatedSeries::one(vars, 6));
    }
}

TEST_CASE("hadamard_total", "[series]")
{
    // coefficient at (1,1) of the Hadamard product entering the two-variable
    // period: A_2 * 2!^3 = 19 * 8, by direct summation
    auto h = hadamard_total(apery_series(4), multinomial_cubed_series(4));
    Integer a2 = 0;
    for (long k = 0; k <= 2; ++k) a2 += binomial(2, k) * binomial(2, k) * binomial(2 + k, k);
    CHECK(h.coeff({1, 1}) == Rational(a2 * 8));
    CHECK(h.coeff({1, 1}) == 152);

    // all-ones series acts as the identity
    Rng rng;
    TruncatedSeries ones({"t"}, 6);
    for (int d = 0; d <= 6; ++d) ones.set({d}, 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto b = random_series(rng, {"x1", "x2"}, 6, false);
        REQUIRE(hadamard_total(ones, b) == b);
    }
}

TEST_CASE("exp log substitute", "[series]")
{
    TruncatedSeries g({"x1", "x2"}, 5);
    g.set({1, 0}, Rational(1, 2));
    g.set({0, 1}, -2);
    g.set({1, 1}, Rational(3, 5));
    auto e = exp_series(g);
    CHECK(log_series(e) == g);

    // substitute x_i -> x_i recovers the series
    auto id = std::vector<TruncatedSeries>{TruncatedSeries::variable({"x1", "x2"}, 5, 0),
                                           TruncatedSeries::variable({"x1", "x2"}, 5, 1)};
    CHECK(substitute(e, id) == e);

    CHECK_THROWS_AS(exp_series(TruncatedSeries::one({"x"}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(substitute(e, {TruncatedSeries::one({"x1", "x2"}, 5),
                                   TruncatedSeries::variable({"x1", "x2"}, 5, 1)}),
                    std::invalid_argument);
}
