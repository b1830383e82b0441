// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exit code 0 iff all criteria pass.

#include <mirrorkit/acceptance.hpp>

#include <chrono>
#include <iostream>

int main()
{
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto rep = mirrorkit::run_acceptance(nullptr);
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();

    for (const auto& r : rep.results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.description << "\n";
        if (!r.details.empty()) std::cout << "      " << r.details << "\n";
    }
    std::cout << (rep.all_pass() ? "all criteria passed" : "FAILURES PRESENT") << " ("
              << dt / 1000.0 << " s)\n";
    return rep.all_pass() ? 0 : 1;
}
