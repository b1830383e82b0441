#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/hodge.hpp>

using namespace mirrorkit;

TEST_CASE("kodaira fibers", "[hodge]")
{
    CHECK(KodairaFiber::In(5).euler() == 5);
    CHECK(KodairaFiber::In(5).components() == 5);
    CHECK(KodairaFiber::In(0).euler() == 0);
    CHECK(KodairaFiber::In(0).components() == 1);
    CHECK(KodairaFiber::II().euler() == 2);
    CHECK(KodairaFiber::II().components() == 1);
}

TEST_CASE("surfaces have Euler sum 12", "[hodge]")
{
    for (const auto& name : {"T0bar", "T0", "T1", "T2", "T3"}) {
        auto s = surface_by_name(name);
        CHECK(s.euler_sum() == 12);
        CHECK_NOTHROW(s.validate());
    }
}

TEST_CASE("euler numbers of the fiber products", "[hodge]")
{
    auto x1 = mirror_fiber_product(1);
    CHECK(euler_fiber_product(x1) == 45); // 5*6 + 5*3
    CHECK(node_count(x1) == 45);
    CHECK(euler_resolved(x1) == 90);

    auto x0 = mirror_fiber_product(0);
    CHECK(euler_fiber_product(x0) == 50);
    CHECK(node_count(x0) == 50);
    CHECK(euler_resolved(x0) == 100);

    auto x3 = mirror_fiber_product(3);
    CHECK(euler_resolved(x3) == 80);

    // no shared singular points -> 0
    SurfaceSpec a{"A",
                  {{"0", KodairaFiber::In(5)},
                   {"inf", KodairaFiber::In(5)},
                   {"p", KodairaFiber::In(1)},
                   {"q", KodairaFiber::In(1)}}};
    SurfaceSpec b{"B",
                  {{"r", KodairaFiber::In(6)},
                   {"s", KodairaFiber::In(3)},
                   {"t", KodairaFiber::In(2)},
                   {"u", KodairaFiber::In(1)}}};
    CHECK(euler_fiber_product({a, b}) == 0);

    // a single shared I1 x I1 point contributes one node
    SurfaceSpec c{"C",
                  {{"0", KodairaFiber::In(1)},
                   {"s2", KodairaFiber::In(9)},
                   {"s3", KodairaFiber::In(1)},
                   {"s4", KodairaFiber::In(1)}}};
    SurfaceSpec d{"D",
                  {{"0", KodairaFiber::In(1)},
                   {"t2", KodairaFiber::In(9)},
                   {"t3", KodairaFiber::In(1)},
                   {"t4", KodairaFiber::In(1)}}};
    CHECK(node_count({c, d}) == 1);

    // type II at a shared point is rejected
    SurfaceSpec e{"E",
                  {{"0", KodairaFiber::II()},
                   {"v", KodairaFiber::In(7)},
                   {"w", KodairaFiber::In(2)},
                   {"y", KodairaFiber::In(1)}}};
    CHECK_THROWS_AS(euler_fiber_product({e, d}), std::invalid_argument);
}

TEST_CASE("hodge numbers of the mirrors", "[hodge]")
{
    const std::pair<int, int> expect[4] = {{51, 1}, {47, 2}, {47, 2}, {43, 3}};
    for (int i = 0; i < 4; ++i) {
        auto spec = mirror_fiber_product(i);
        CHECK(schoen_h11(spec, 0) == expect[i].first);
        auto hp = hodge_pair(spec, 0);
        CHECK(hp.first == expect[i].first);
        CHECK(hp.second == expect[i].second);
        CHECK(euler_resolved(spec) % 2 == 0);
    }

    // mirror exchange against the Hodge numbers of the linear-section
    // threefolds: (h11, h21) = (2,47), (2,47), (3,43), and (1,51) for the
    // double-Grassmannian section
    const std::pair<int, int> primal[4] = {{1, 51}, {2, 47}, {2, 47}, {3, 43}};
    for (int i = 0; i < 4; ++i) {
        auto hp = hodge_pair(mirror_fiber_product(i), 0);
        CHECK(hp.first == primal[i].second);
        CHECK(hp.second == primal[i].first);
    }
}
