#pragma once

#include <mirrorkit/fit.hpp>
#include <mirrorkit/yukawa.hpp>

namespace mirrorkit {

/// theta-couplings C_T indexed by theta-multidegree |T| = 3.
using CouplingSet = std::map<Mono, TruncatedSeries>;

inline CouplingSet couplings_from_yukawa(const YukawaSet& y, int cap)
{
    CouplingSet c;
    for (int j = 0; j <= 3; ++j) c[Mono{3 - j, j}] = y.coupling_series(j, cap);
    return c;
}

/// Normalized couplings in the mirror coordinates plus the extracted
/// genus-0 invariants: K_T(q) = (1/omega0^2) sum C_S prod dlog z_i / dlog q_a.
struct QExpansion {
    std::map<Mono, TruncatedSeries> K;
    GWTable gw;
    BPSTable bps;
};

/// Read off N_gamma from normalized couplings in mirror coordinates: the
/// q^gamma coefficient of K_T is N_gamma times the T-weighted product of the
/// degree components. Extractions from different T must agree.
inline GWTable extract_gw_from_couplings(const std::map<Mono, TruncatedSeries>& K)
{
    std::map<Mono, Rational> N;
    for (const auto& [T, ser] : K) {
        const std::size_t n = T.size();
        for (const auto& [g, v] : ser.coefficients()) {
            if (total_degree(g) == 0) continue;
            Rational w = 1;
            for (std::size_t a = 0; a < n; ++a)
                for (int r = 0; r < T[a]; ++r) w *= g[a];
            if (w == 0) continue;
            Rational Nb = v / w;
            auto it = N.find(g);
            if (it == N.end())
                N[g] = Nb;
            else if (it->second != Nb)
                throw std::runtime_error("extract_gw: inconsistent invariants across pairings");
        }
    }
    GWTable out;
    for (auto& [g, v] : N)
        if (v != 0) out[g] = v;
    return out;
}

/// Integer BPS table from normalized couplings (multi-cover inversion).
inline BPSTable bps_extract(const std::map<Mono, TruncatedSeries>& K)
{
    return bps_from_gw(extract_gw_from_couplings(K));
}

inline QExpansion q_expand_couplings(const FrobeniusBasis& frob, const MirrorMap& mm,
                                     const CouplingSet& C)
{
    const std::size_t n = frob.omega0.nvars();
    const int cap = frob.omega0.cap();
    const auto& qv = mm.qvars;

    // chain matrix M[i][a] = dlog z_i/dlog q_a = delta - Theta_a tau_i(z(q))
    std::vector<std::vector<TruncatedSeries>> M(n, std::vector<TruncatedSeries>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto tau_q = substitute(mm.tau[i], mm.z_of_q);
        for (std::size_t a = 0; a < n; ++a) {
            TruncatedSeries d(qv, cap);
            if (i == a) d = TruncatedSeries::one(qv, cap);
            M[i][a] = d - tau_q.theta(a);
        }
    }
    auto omega_q = substitute(frob.omega0, mm.z_of_q);
    auto inv_w2 = reciprocal(omega_q * omega_q);
    // substituted couplings
    CouplingSet Cq;
    for (const auto& [T, ser] : C) Cq[T] = substitute(ser, mm.z_of_q);

    QExpansion out;
    std::vector<Mono> keys;
    for (const auto& [T, s] : C) keys.push_back(T);
    for (const auto& T : keys) {
        // slots of target indices
        std::vector<int> slots;
        for (std::size_t a = 0; a < n; ++a)
            for (int r = 0; r < T[a]; ++r) slots.push_back(static_cast<int>(a));
        TruncatedSeries acc(qv, cap);
        std::vector<int> src(3, 0);
        std::function<void(int, TruncatedSeries)> rec = [&](int slot, TruncatedSeries partial) {
            if (slot == 3) {
                Mono S(n, 0);
                for (int r = 0; r < 3; ++r) ++S[src[r]];
                acc += Cq.at(S) * partial;
                return;
            }
            for (int i = 0; i < static_cast<int>(n); ++i) {
                src[slot] = i;
                rec(slot + 1, partial * M[i][slots[slot]]);
            }
        };
        rec(0, TruncatedSeries::one(qv, cap));
        out.K[T] = acc * inv_w2;
    }

    out.gw = extract_gw_from_couplings(out.K);
    out.bps = bps_from_gw(out.gw);
    return out;
}

/// Full B-model run at one large-complex-structure chart.
struct BModelRun {
    std::string chart;
    std::vector<ThetaOperator> ops;
    FrobeniusBasis frob;
    MirrorMap mm;
    CouplingSet C;
    YukawaSet rational;
    QExpansion q;
    TripleIntersections kappa;
    bool via_transport = false;
    int solution_dimension = -1;
};

/// Direct pipeline: Frobenius solutions, transversality Yukawas normalized
/// by kappa, rational fit, mirror map and BPS extraction. The recomputed
/// holomorphic solution is checked against the chart's closed-form period.
inline BModelRun bmodel_chart(const LcsChart& chart, int cap, const TripleIntersections& kappa,
                              int dim_probe_cap = 5)
{
    BModelRun run;
    run.chart = chart.name;
    run.kappa = kappa;
    run.ops = chart_operators(chart);
    run.frob = frobenius_solve(run.ops, cap, dim_probe_cap);
    if (!(run.frob.omega0 == chart.holomorphic_period(cap)))
        throw std::runtime_error("bmodel: Frobenius solution differs from the closed-form period");
    run.solution_dimension = run.frob.solution_dimension;
    auto C4 = yukawa_series(run.ops, kappa, cap);
    run.rational = yukawa_fit_rational(C4, chart, kappa);
    run.C = couplings_from_yukawa(run.rational, cap);
    // the fitted rational form must reproduce the solved series
    for (int j = 0; j <= 3; ++j)
        if (!(run.C.at(Mono{3 - j, j}) == C4[j]))
            throw std::runtime_error("bmodel: rational Yukawa fit disagrees with the series");
    run.mm = mirror_map(run.frob);
    run.q = q_expand_couplings(run.frob, run.mm, run.C);
    return run;
}

/// Transported pipeline: take the rational Yukawa set of a source run,
/// transport it to the target chart, and run the target-chart Frobenius /
/// mirror-map / BPS machinery on it.
inline BModelRun bmodel_chart_transported(const BModelRun& source, const LcsChart& from,
                                          const LcsChart& to, int cap, int dim_probe_cap = 5)
{
    BModelRun run;
    run.chart = to.name;
    run.via_transport = true;
    run.ops = chart_operators(to);
    run.frob = frobenius_solve(run.ops, cap, dim_probe_cap);
    if (!(run.frob.omega0 == to.holomorphic_period(cap)))
        throw std::runtime_error("bmodel: Frobenius solution differs from the closed-form period");
    run.solution_dimension = run.frob.solution_dimension;
    run.rational = transport_lcs(source.rational, from, to);
    run.kappa = run.rational.kappa;
    run.C = couplings_from_yukawa(run.rational, cap);
    run.mm = mirror_map(run.frob);
    run.q = q_expand_couplings(run.frob, run.mm, run.C);
    return run;
}

/// One-parameter pipeline for the Hadamard-square family: fit the
/// Picard-Fuchs operator from the period, solve the Yukawa from the
/// fourth-order pairing 2 c4 theta C + c3 C = 0, and extract BPS numbers.
struct BModelX0Run {
    ThetaOperator op;
    FrobeniusBasis frob;
    MirrorMap mm;
    TruncatedSeries C;
    Poly num, den; // rational form of C
    QExpansion q;
};

inline BModelX0Run bmodel_x0(int fit_cap, int cap, const Rational& kappa)
{
    BModelX0Run run;
    auto period = period_x0(fit_cap);
    std::vector<ThetaOperator> ops;
    for (int coeff_deg = 2; coeff_deg <= 6; ++coeff_deg) {
        try {
            ops = fit_operator(period, 4, coeff_deg);
        } catch (const std::runtime_error&) {
            continue;
        }
        if (!ops.empty()) break;
    }
    if (ops.size() != 1)
        throw std::runtime_error("bmodel_x0: expected a unique fitted operator");
    run.op = ops[0];
    auto chk = annihilates(run.op, period, fit_cap);
    if (!chk.annihilates) throw std::runtime_error("bmodel_x0: fitted operator fails to annihilate");

    run.frob = frobenius_solve({run.op}, cap, 4);
    if (!(run.frob.omega0 == period_x0(cap)))
        throw std::runtime_error("bmodel_x0: Frobenius solution differs from the period");

    // pairing of the order-4 operator: c4 * 2 theta C + c3 * C = 0
    Poly c4, c3;
    for (const auto& [t, poly] : run.op.terms()) {
        if (total_degree(t) == 4)
            for (const auto& [e, c] : poly) c4 = poly_add(c4, Poly{{e, c}});
        if (total_degree(t) == 3)
            for (const auto& [e, c] : poly) c3 = poly_add(c3, Poly{{e, c}});
    }
    TruncatedSeries C({"x"}, cap);
    C.set({0}, kappa);
    Rational lead = c4.at(Mono{0});
    for (int m = 1; m <= cap; ++m) {
        Rational acc = 0;
        for (const auto& [e, c] : c4)
            if (e[0] >= 1 && m - e[0] >= 0) acc += 2 * c * (m - e[0]) * C.coeff({m - e[0]});
        for (const auto& [e, c] : c3)
            if (m - e[0] >= 0) acc += c * C.coeff({m - e[0]});
        if (c3.count(Mono{0})) throw std::runtime_error("bmodel_x0: not maximally unipotent at 0");
        Rational v = -acc / (2 * lead * m);
        if (v != 0) C.set({m}, v);
    }
    run.C = C;

    // rational form with the operator's leading coefficient as denominator
    {
        auto prod = C * poly_to_series(c4, {"x"}, cap);
        int numdeg = poly_degree(c4);
        Poly num;
        for (const auto& [m, v] : prod.coefficients()) {
            if (total_degree(m) <= numdeg)
                num[m] = v;
            else
                throw std::runtime_error("bmodel_x0: Yukawa is not c4-rational");
        }
        run.num = std::move(num);
        run.den = c4;
    }

    run.mm = mirror_map(run.frob);
    CouplingSet cs;
    cs[Mono{3}] = C;
    run.q = q_expand_couplings(run.frob, run.mm, cs);
    return run;
}

} // namespace mirrorkit
