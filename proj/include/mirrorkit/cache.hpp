#pragma once

#include <mirrorkit/series_io.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

namespace mirrorkit {

inline std::uint64_t fnv1a64(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v)
{
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

/// Disk cache for series artifacts, keyed by a content hash of the
/// generating parameters. A corrupted or mismatched entry is recomputed and
/// rewritten with a warning.
class ArtifactCache {
public:
    explicit ArtifactCache(std::filesystem::path dir) : dir_(std::move(dir))
    {
        std::filesystem::create_directories(dir_);
    }

    static std::filesystem::path default_dir()
    {
        if (const char* env = std::getenv("MIRRORKIT_CACHE")) return env;
        return std::filesystem::temp_directory_path() / "mirrorkit-cache";
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path entry_path(const std::string& name, const std::string& params) const
    {
        return dir_ / (name + "-" + hex64(fnv1a64(params)) + ".series");
    }

    TruncatedSeries series(const std::string& name, const std::string& params,
                           const std::function<TruncatedSeries()>& compute, bool* hit = nullptr)
    {
        auto path = entry_path(name, params);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path);
            try {
                auto s = read_series(in);
                if (hit) *hit = true;
                return s;
            } catch (const std::exception& e) {
                std::cerr << "warning: corrupted cache entry " << path.string() << " ("
                          << e.what() << "), recomputing\n";
            }
        }
        if (hit) *hit = false;
        auto s = compute();
        std::ofstream out(path);
        write_series(out, s);
        return s;
    }

private:
    std::filesystem::path dir_;
};

} // namespace mirrorkit
