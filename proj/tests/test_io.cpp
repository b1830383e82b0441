#include <catch2/catch_amalgamated.hpp>

#include <mirrorkit/cache.hpp>
#include <mirrorkit/periods.hpp>
#include <mirrorkit/series_io.hpp>

#include <filesystem>
#include <fstream>

using namespace mirrorkit;

TEST_CASE("series text format round trip", "[io]")
{
    auto s = period_x1(6);
    auto t = series_from_string(series_to_string(s));
    CHECK(t == s);

    auto u = period_x1_lcs010(5);
    CHECK(series_from_string(series_to_string(u)) == u);

    CHECK_THROWS_AS(series_from_string("nonsense"), std::invalid_argument);
}

TEST_CASE("cache determinism and corruption recovery", "[io]")
{
    auto dir = std::filesystem::temp_directory_path() / "mirrorkit-test-cache";
    std::filesystem::remove_all(dir);
    ArtifactCache cache(dir);

    int computed = 0;
    auto compute = [&] {
        ++computed;
        return period_x0(8);
    };
    bool hit = false;
    auto cold = cache.series("period-x0", "x0:8", compute, &hit);
    CHECK_FALSE(hit);
    auto warm = cache.series("period-x0", "x0:8", compute, &hit);
    CHECK(hit);
    CHECK(computed == 1);
    CHECK(cold == warm); // identical outputs cold vs warm

    // different parameters get a different entry
    cache.series("period-x0", "x0:9", [&] { return period_x0(9); }, &hit);
    CHECK_FALSE(hit);

    // corrupted entry: recomputed with a warning, result still exact
    auto path = cache.entry_path("period-x0", "x0:8");
    std::ofstream(path) << "garbage\n";
    auto recovered = cache.series("period-x0", "x0:8", compute, &hit);
    CHECK_FALSE(hit);
    CHECK(computed == 2);
    CHECK(recovered == cold);
    std::filesystem::remove_all(dir);
}
