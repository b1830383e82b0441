#pragma once

#include <mirrorkit/series.hpp>

#include <map>

namespace mirrorkit {

/// Genus-0 Gromov-Witten invariants N_beta keyed by curve multi-degree.
using GWTable = std::map<Mono, Rational>;
/// Integer BPS counts n_beta.
using BPSTable = std::map<Mono, Integer>;

namespace detail {

inline bool divides(int k, const Mono& m, Mono& out)
{
    out.assign(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] % k != 0) return false;
        out[i] = m[i] / k;
    }
    return true;
}

} // namespace detail

/// Remove multiple-cover contributions: N_beta = sum_{k | beta} n_{beta/k} / k^3,
/// where k divides every component. Throws if some n_beta is not an integer.
inline BPSTable bps_from_gw(const GWTable& gw)
{
    BPSTable n;
    std::vector<Mono> degs;
    for (const auto& [m, v] : gw) degs.push_back(m);
    std::stable_sort(degs.begin(), degs.end(),
                     [](const Mono& a, const Mono& b) { return total_degree(a) < total_degree(b); });
    Mono q;
    for (const auto& m : degs) {
        Rational acc = gw.at(m);
        for (int k = 2; k <= total_degree(m); ++k) {
            if (!detail::divides(k, m, q)) continue;
            auto it = n.find(q);
            if (it != n.end()) acc -= Rational(it->second, Integer(k) * k * k);
        }
        if (!is_integer(acc)) throw std::runtime_error("bps_from_gw: non-integer BPS number");
        if (acc != 0) n[m] = num(acc);
    }
    return n;
}

/// Forward direction of the multi-cover formula, for cross-checks.
inline GWTable gw_from_bps(const BPSTable& n, int max_total_degree)
{
    GWTable gw;
    Mono q;
    for (const auto& [m, v] : n) {
        if (total_degree(m) > max_total_degree) continue;
        (void)v;
    }
    // accumulate contributions n_{beta} -> N_{k beta}
    for (const auto& [m, v] : n) {
        for (int k = 1; k * total_degree(m) <= max_total_degree; ++k) {
            Mono km(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) km[i] = k * m[i];
            gw[km] += Rational(v, Integer(k) * k * k);
        }
    }
    return gw;
}

} // namespace mirrorkit
