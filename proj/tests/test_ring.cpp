#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/ambient.hpp>
#include <mirrorkit/graded_ring.hpp>
#include <mirrorkit/linalg.hpp>

using namespace mirrorkit;

namespace {

void check_associative_exhaustive(const GradedRing& g)
{
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j)
            for (int k = 0; k < g.rank(); ++k) {
                auto a = g.basis(i), b = g.basis(j), c = g.basis(k);
                REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            }
}

void check_graded_commutative(const GradedRing& g)
{
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j)
            REQUIRE(g.mul(g.basis(i), g.basis(j)) == g.mul(g.basis(j), g.basis(i)));
}

void check_poincare_nondegenerate(const GradedRing& g)
{
    // pairing blocks per degree must have full rank
    for (int d = 0; d <= g.complex_dim; ++d) {
        std::vector<int> lo, hi;
        for (int i = 0; i < g.rank(); ++i) {
            if (g.degrees[i] == 2 * d) lo.push_back(i);
            if (g.degrees[i] == 2 * (g.complex_dim - d)) hi.push_back(i);
        }
        REQUIRE(lo.size() == hi.size());
        std::vector<std::vector<Rational>> m;
        for (int i : lo) {
            std::vector<Rational> row;
            for (int j : hi) row.push_back(g.integrate(g.mul(g.basis(i), g.basis(j))));
            m.push_back(std::move(row));
        }
        REQUIRE(rank_of(m, static_cast<int>(hi.size())) == static_cast<int>(lo.size()));
    }
}

} // namespace

TEST_CASE("projective space ring", "[ring]")
{
    auto p2 = ring_projective_space(2);
    CHECK(p2.rank() == 3);
    CHECK(p2.integrate(p2.basis(2)) == 1);
    CHECK(p2.mul(p2.basis(1), p2.basis(2)).is_zero()); // h * h^2 = h^3 = 0
    check_associative_exhaustive(p2);
    check_poincare_nondegenerate(p2);
}

TEST_CASE("grassmannian ring", "[ring]")
{
    auto g = ring_grassmannian_2_5();
    // rank by enumerating partitions in a 2x3 box
    int count = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= a; ++b) ++count;
    CHECK(g.rank() == count);
    CHECK(g.rank() == 10);

    // int sigma_1^6 = 5
    auto s1 = g.basis(1);
    auto acc = g.one();
    for (int i = 0; i < 6; ++i) acc = g.mul(acc, s1);
    CHECK(g.integrate(acc) == 5);

    // sigma_1 * sigma_{3,3} exceeds the top degree
    CHECK(g.mul(s1, g.basis(g.top)).is_zero());

    check_associative_exhaustive(g);
    check_graded_commutative(g);
    check_poincare_nondegenerate(g);
}

TEST_CASE("product rings", "[ring]")
{
    auto p2 = ring_projective_space(2);
    auto pp = ring_product(p2, p2);
    CHECK(pp.ring.rank() == 9);
    auto h1h1h2h2 =
        pp.ring.mul(pp.ring.basis(pp.index(2, 0)), pp.ring.basis(pp.index(0, 2)));
    CHECK(pp.ring.integrate(h1h1h2h2) == 1);
    check_associative_exhaustive(pp.ring);
    check_poincare_nondegenerate(pp.ring);

    auto g = ring_grassmannian_2_5();
    auto gp = ring_product(g, p2);
    auto gpp = ring_product(gp.ring, p2);
    CHECK(gpp.ring.rank() == 90);
}

TEST_CASE("projective bundles", "[ring]")
{
    // trivial rank-2 bundle over P1: xi^2 = 0, rank 4
    auto p1 = ring_projective_space(1);
    auto triv = ring_projective_bundle(p1, {}, 2);
    CHECK(triv.ring.rank() == 4);
    CHECK(triv.ring.mul(triv.xi(), triv.xi()).is_zero());
    check_associative_exhaustive(triv.ring);
    check_poincare_nondegenerate(triv.ring);

    // Whitney: c(K1) is the inverse of c(O(1)) = 1 + h on P2
    auto p2 = ring_projective_space(2);
    RingClass cO = p2.one() + p2.basis(1);
    RingClass cK = p2.one() - p2.basis(1) + p2.basis(2);
    CHECK(p2.mul(cO, cK) == p2.one());
}

TEST_CASE("X1 ambient ring and intersections", "[ring]")
{
    AmbientX1 amb;
    CHECK(amb.ring().complex_dim == 11);
    CHECK(amb.base.ring.rank() == 90);

    // Grothendieck relation reduces to zero
    RingClass rel = amb.L * amb.L - (amb.sigma1 + amb.h[0] + amb.h[1]) * amb.L +
                    amb.sigma1 * (amb.h[0] + amb.h[1]);
    CHECK(rel.is_zero());

    auto kappa = amb.kappa();
    CHECK(kappa(0, 0, 0) == 0); // D_1^3 = 0: pulled back from a surface
    CHECK(kappa(0, 0, 1) == 5);
    CHECK(kappa(0, 1, 1) == 5);
    CHECK(kappa(1, 1, 1) == 0);

    // restriction is consistent: (L - H_i)|_{X1} = 0, so int L^8 (L-H_i) w = 0
    // for every ambient class w of complementary degree
    RingClass d1 = amb.L - amb.sigma1;
    RingClass d2 = amb.L - amb.h[0] - amb.h[1];
    for (int i = 0; i < amb.ring().rank(); ++i) {
        if (amb.ring().degrees[i] != 4) continue;
        auto w = amb.ring().basis(i);
        REQUIRE(amb.integrate_x1(d1 * w) == 0);
        REQUIRE(amb.integrate_x1(d2 * w) == 0);
    }
}

TEST_CASE("X0 ambient ring", "[ring]")
{
    AmbientX0 amb;
    CHECK(amb.ring().complex_dim == 13);
    CHECK(amb.kappa() == 25);
    for (const RingClass& d : {amb.L - amb.bundle.lift(amb.s1a), amb.L - amb.bundle.lift(amb.s1b)})
        for (int i = 0; i < amb.ring().rank(); ++i) {
            if (amb.ring().degrees[i] != 4) continue;
            REQUIRE(amb.integrate_x0(d * amb.ring().basis(i)) == 0);
        }
}

TEST_CASE("Y1 ambient ring and intersections", "[ring]")
{
    AmbientY1 amb;
    CHECK(amb.ring().complex_dim == 14);

    // Grothendieck relation of the rank-6 kernel bundle: xi^6 - 3h xi^5 + 6h^2 xi^4 = 0
    const auto& inner = amb.inner.ring;
    RingClass xi = amb.inner.xi(), h = amb.inner.lift(amb.p2.basis(1));
    RingClass xi4 = inner.one();
    for (int i = 0; i < 4; ++i) xi4 = xi4 * xi;
    RingClass rel = xi4 * xi * xi - Rational(3) * (h * (xi4 * xi)) + Rational(6) * (h * h * xi4);
    CHECK(rel.is_zero());

    auto kappa = amb.kappa();
    CHECK(kappa(0, 0, 0) == 15); // deg of the projective join
    CHECK(kappa(0, 0, 1) == 15);
    CHECK(kappa(0, 1, 1) == 5);
    CHECK(kappa(1, 1, 1) == 0);
}

TEST_CASE("sampled associativity on the big ambient rings", "[ring]")
{
    AmbientX1 amb;
    const auto& g = amb.ring();
    unsigned long long st = 42;
    auto next = [&] {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<int>((st >> 17) % g.rank());
    };
    for (int t = 0; t < 300; ++t) {
        auto a = g.basis(next()), b = g.basis(next()), c = g.basis(next());
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
    check_poincare_nondegenerate(g);
}
