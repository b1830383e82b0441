#pragma once

#include <mirrorkit/linalg.hpp>
#include <mirrorkit/theta_op.hpp>

#include <array>

namespace mirrorkit {

/// Holomorphic and single-log solutions at a maximal-degeneration point:
/// omega_0 and omega_i = omega_0 log z_i + s_i with s_i(0) = 0.
struct FrobeniusBasis {
    TruncatedSeries omega0;
    std::vector<TruncatedSeries> single_log;
    int solution_dimension = -1; // via the log-ansatz probe; -1 if not run
    int probe_degree = -1;
};

namespace detail {

/// indicial polynomial (constant coordinate coefficients) evaluated at m
inline Rational indicial_at(const ThetaOperator& op, const Mono& m)
{
    Rational acc = 0;
    const Mono zero(op.nvars(), 0);
    for (const auto& [t, poly] : op.terms()) {
        auto it = poly.find(zero);
        if (it == poly.end()) continue;
        Rational v = it->second;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int j = 0; j < t[i]; ++j) v *= m[i];
        acc += v;
    }
    return acc;
}

inline std::vector<Mono> degree_slice(std::size_t nvars, int d)
{
    std::vector<Mono> out;
    Mono m(nvars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i + 1 == nvars) {
            m[i] = rem;
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m[i] = e;
            rec(i + 1, rem - e);
        }
    };
    rec(0, d);
    return out;
}

/// D^gamma P = (1/gamma!) d^{|gamma|} P / d theta^gamma
inline ThetaOperator dtheta_scaled(const ThetaOperator& op, const Mono& gamma)
{
    ThetaOperator r = op;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        for (int j = 0; j < gamma[i]; ++j) r = Rational(1, j + 1) * r.dtheta(i);
    return r;
}

} // namespace detail

/// Pick the operator whose indicial form is invertible at every 0 < |m| <= cap.
inline std::size_t frobenius_driver(const std::vector<ThetaOperator>& ops, int cap)
{
    int first_bad = -1;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        bool ok = true;
        for (int d = 1; d <= cap && ok; ++d)
            for (const auto& m : detail::degree_slice(ops[k].nvars(), d))
                if (detail::indicial_at(ops[k], m) == 0) {
                    ok = false;
                    if (first_bad < 0 || d < first_bad) first_bad = d;
                    break;
                }
        if (ok) return k;
    }
    throw std::runtime_error(
        "frobenius: indicial degeneration at degree " + std::to_string(first_bad) +
        ", no operator drives the recursion");
}

/// Solve driver(f) = rhs degree by degree with f(0) = f0; the indicial value
/// divides at each step.
inline TruncatedSeries frobenius_recursion(const ThetaOperator& driver, const TruncatedSeries& rhs,
                                           const Rational& f0, int cap)
{
    TruncatedSeries f(driver.vars(), cap);
    const Mono zero(driver.nvars(), 0);
    if (f0 != 0) f.set(zero, f0);
    for (int d = 1; d <= cap; ++d)
        for (const auto& m : detail::degree_slice(driver.nvars(), d)) {
            // driver(f)|_m = indicial(m) f_m + (terms with lower-degree f)
            Rational lower = driver.action_coefficient(f, m);
            Rational v = (rhs.coeff(m) - lower) / detail::indicial_at(driver, m);
            if (v != 0) f.set(m, v);
        }
    return f;
}

inline int log_solution_dimension(const std::vector<ThetaOperator>& ops, int cap, int log_bound = 3);

/// Recompute the holomorphic period and the single-log corrections from the
/// operator system, and report the dimension of the degree-truncated
/// log-polynomial solution space (probe_cap 0 skips the probe). Every
/// operator is checked against the solutions through the cap; a mismatch
/// throws.
inline FrobeniusBasis frobenius_solve(const std::vector<ThetaOperator>& ops, int cap,
                                      int probe_cap = 5)
{
    if (ops.empty()) throw std::invalid_argument("frobenius: no operators");
    const std::size_t n = ops.front().nvars();
    std::size_t drv = frobenius_driver(ops, cap);

    FrobeniusBasis basis;
    if (probe_cap > 0) {
        basis.solution_dimension = log_solution_dimension(ops, std::min(cap, probe_cap));
        basis.probe_degree = std::min(cap, probe_cap);
    }
    basis.omega0 =
        frobenius_recursion(ops[drv], TruncatedSeries(ops[drv].vars(), cap), 1, cap);
    for (const auto& op : ops) {
        auto chk = annihilates(op, basis.omega0, cap);
        if (!chk.annihilates)
            throw std::runtime_error("frobenius: operator fails on the holomorphic solution");
    }

    for (std::size_t a = 0; a < n; ++a) {
        // P(s_a) = -(dP/dtheta_a)(omega0) for every P, from
        // P(omega0 log z_a + s_a) = 0
        auto rhs = [&](const ThetaOperator& op) {
            TruncatedSeries r(op.vars(), cap);
            auto dp = op.dtheta(a);
            for (int d = 0; d <= cap; ++d)
                for (const auto& m : detail::degree_slice(n, d)) {
                    Rational v = dp.action_coefficient(basis.omega0, m);
                    if (v != 0) r.set(m, -v);
                }
            return r;
        };
        TruncatedSeries s = frobenius_recursion(ops[drv], rhs(ops[drv]), 0, cap);
        for (std::size_t k = 0; k < ops.size(); ++k) {
            if (k == drv) continue;
            auto want = rhs(ops[k]);
            for (int d = 0; d <= cap; ++d)
                for (const auto& m : detail::degree_slice(n, d))
                    if (ops[k].action_coefficient(s, m) != want.coeff(m))
                        throw std::runtime_error("frobenius: single-log system inconsistent");
        }
        basis.single_log.push_back(std::move(s));
    }
    return basis;
}

/// Dimension of the space of solutions sum_J f_J(z) prod log^{J_i} z_i with
/// total log degree <= log_bound, truncated at total degree cap. Seeds are
/// the constant terms f_J(0); coefficients propagate linearly through the
/// driver recursion and every remaining equation becomes a linear constraint
/// on the seeds.
inline int log_solution_dimension(const std::vector<ThetaOperator>& ops, int cap, int log_bound)
{
    const std::size_t n = ops.front().nvars();
    std::vector<Mono> logs;
    for (int d = 0; d <= log_bound; ++d)
        for (const auto& J : detail::degree_slice(n, d)) logs.push_back(J);
    const std::size_t nseed = logs.size();
    std::map<Mono, std::size_t> logidx;
    for (std::size_t i = 0; i < nseed; ++i) logidx[logs[i]] = i;

    using Vec = std::vector<Rational>; // linear form in the seeds
    std::size_t drv = frobenius_driver(ops, cap);

    // f[J][m] as linear forms in seeds
    std::map<Mono, std::map<Mono, Vec>> f;
    for (std::size_t i = 0; i < nseed; ++i) {
        Vec seed(nseed, 0);
        seed[i] = 1;
        f[logs[i]][Mono(n, 0)] = seed;
    }
    auto get = [&](const Mono& J, const Mono& m) -> const Vec* {
        auto it = f.find(J);
        if (it == f.end()) return nullptr;
        auto jt = it->second.find(m);
        return jt == it->second.end() ? nullptr : &jt->second;
    };

    // residue of op(solution) at output (K, M) from already-known
    // coefficients, as a linear form; the unknown f_{K,M} contributes
    // indicial(M) and is excluded when skip_diagonal is set.
    auto residue = [&](const ThetaOperator& op, const Mono& K, const Mono& M, bool skip_diagonal) {
        Vec acc(nseed, 0);
        for (const auto& J : logs) {
            bool ge = true;
            for (std::size_t i = 0; i < n; ++i) ge = ge && J[i] >= K[i];
            if (!ge) continue;
            Mono gamma(n);
            Rational comb = 1;
            for (std::size_t i = 0; i < n; ++i) {
                gamma[i] = J[i] - K[i];
                comb *= Rational(binomial(J[i], gamma[i]));
            }
            ThetaOperator dp = detail::dtheta_scaled(op, gamma);
            for (const auto& [t, poly] : dp.terms())
                for (const auto& [e, c] : poly) {
                    Mono m(n);
                    bool ok = true;
                    for (std::size_t i = 0; i < n; ++i) {
                        m[i] = M[i] - e[i];
                        if (m[i] < 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    if (skip_diagonal && J == K && m == M && total_degree(e) == 0) continue;
                    const Vec* fm = get(J, m);
                    if (!fm) continue;
                    Rational v = c * comb;
                    for (std::size_t i = 0; i < n; ++i)
                        for (int j = 0; j < t[i]; ++j) v *= m[i];
                    if (v == 0) continue;
                    for (std::size_t i = 0; i < nseed; ++i) acc[i] += v * (*fm)[i];
                }
        }
        return acc;
    };

    std::vector<Vec> constraints;
    // propagate degree by degree, log level from high to low
    for (int d = 1; d <= cap; ++d)
        for (const auto& M : detail::degree_slice(n, d))
            for (auto it = logs.rbegin(); it != logs.rend(); ++it) {
                const Mono& K = *it;
                Rational ind = detail::indicial_at(ops[drv], M);
                Vec r = residue(ops[drv], K, M, true);
                Vec val(nseed, 0);
                for (std::size_t i = 0; i < nseed; ++i) val[i] = -r[i] / ind;
                bool nonzero = false;
                for (const auto& x : val) nonzero = nonzero || x != 0;
                if (nonzero) f[K][M] = std::move(val);
            }
    // constraints: every equation of the non-driver operators, plus the
    // driver's equations at M = 0 (indicial 0 there)
    for (std::size_t k = 0; k < ops.size(); ++k)
        for (int d = 0; d <= cap; ++d)
            for (const auto& M : detail::degree_slice(n, d)) {
                if (k == drv && total_degree(M) > 0) continue;
                for (const auto& K : logs) {
                    Vec r = residue(ops[k], K, M, false);
                    bool nonzero = false;
                    for (const auto& x : r) nonzero = nonzero || x != 0;
                    if (nonzero) constraints.push_back(std::move(r));
                }
            }
    int rank = constraints.empty() ? 0 : rank_of(constraints, static_cast<int>(nseed));
    return static_cast<int>(nseed) - rank;
}

/// Mirror map of a Frobenius basis: q_a = z_a exp(s_a/omega0), plus the
/// inverse z_a(q) by fixed-point reversion.
struct MirrorMap {
    std::vector<TruncatedSeries> tau;    // s_a/omega0, in the chart coordinates
    std::vector<TruncatedSeries> z_of_q; // inverse map, series in q
    std::vector<std::string> qvars;
};

inline MirrorMap mirror_map(const FrobeniusBasis& basis)
{
    const auto& vars = basis.omega0.vars();
    const std::size_t n = vars.size();
    const int cap = basis.omega0.cap();
    MirrorMap mm;
    auto inv = reciprocal(basis.omega0);
    for (std::size_t a = 0; a < n; ++a) mm.tau.push_back(basis.single_log[a] * inv);
    for (std::size_t a = 0; a < n; ++a) mm.qvars.push_back("q_" + vars[a]);
    std::vector<TruncatedSeries> z(n);
    for (std::size_t a = 0; a < n; ++a) z[a] = TruncatedSeries::variable(mm.qvars, cap, a);
    for (int it = 0; it <= cap; ++it) {
        std::vector<TruncatedSeries> nz(n);
        for (std::size_t a = 0; a < n; ++a)
            nz[a] = TruncatedSeries::variable(mm.qvars, cap, a) *
                    exp_series(Rational(-1) * substitute(mm.tau[a], z));
        z = std::move(nz);
    }
    for (std::size_t a = 0; a < n; ++a) {
        auto q = z[a] * exp_series(substitute(mm.tau[a], z));
        if (!(q == TruncatedSeries::variable(mm.qvars, cap, a)))
            throw std::runtime_error("mirror_map: reversion failed");
    }
    mm.z_of_q = std::move(z);
    return mm;
}

} // namespace mirrorkit
