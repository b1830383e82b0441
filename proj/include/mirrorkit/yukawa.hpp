#pragma once

#include <mirrorkit/ambient.hpp>
#include <mirrorkit/bps.hpp>
#include <mirrorkit/frobenius.hpp>
#include <mirrorkit/picard_fuchs.hpp>

#include <array>

namespace mirrorkit {

/// Sparse multivariate polynomial (no truncation).
using Poly = std::map<Mono, Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto& v = out[m];
            v += ca * cb;
            if (v == 0) out.erase(m);
        }
    return out;
}

inline Poly poly_add(const Poly& a, const Poly& b, const Rational& s = 1)
{
    Poly out = a;
    for (const auto& [m, c] : b) {
        auto& v = out[m];
        v += s * c;
        if (v == 0) out.erase(m);
    }
    return out;
}

inline Poly poly_scale(const Poly& a, const Rational& s)
{
    Poly out;
    if (s == 0) return out;
    for (const auto& [m, c] : a) out[m] = s * c;
    return out;
}

inline int poly_degree(const Poly& a)
{
    int d = 0;
    for (const auto& [m, c] : a) d = std::max(d, total_degree(m));
    return d;
}

inline TruncatedSeries poly_to_series(const Poly& a, const std::vector<std::string>& vars, int cap)
{
    TruncatedSeries s(vars, cap);
    for (const auto& [m, c] : a)
        if (total_degree(m) <= cap) s.set(m, c);
    return s;
}

/// The degree-6 discriminant of the two-parameter family, as a homogeneous
/// polynomial in (z0, z1, z2): the norm of (zeta z0 + z1 + z2)^3 - 27 zeta
/// z0 z1 z2 over the two roots of zeta^2 + 11 zeta - 1 = 0. Expanding with
/// zeta^2 = 1 - 11 zeta pairs the conjugates, so the coefficients are
/// rational (in fact integers).
inline Poly discriminant_polynomial()
{
    auto mono3 = [](int a, int b, int c, const Rational& v) {
        return Poly{{Mono{a, b, c}, v}};
    };
    Poly z0 = mono3(1, 0, 0, 1);
    Poly s = poly_add(mono3(0, 1, 0, 1), mono3(0, 0, 1, 1));
    Poly z0sq = poly_mul(z0, z0), z0cu = poly_mul(z0sq, z0);
    Poly ssq = poly_mul(s, s), scu = poly_mul(ssq, s);
    // (zeta z0 + s)^3 - 27 zeta z0 z1 z2 = A + B zeta with zeta^3 = 122 zeta - 11
    Poly A = poly_add(poly_add(poly_scale(z0cu, -11), poly_mul(z0sq, poly_scale(s, 3))), scu);
    Poly B = poly_add(poly_add(poly_scale(z0cu, 122), poly_mul(z0sq, poly_scale(s, -33))),
                      poly_add(poly_mul(z0, poly_scale(ssq, 3)), mono3(1, 1, 1, -27)));
    // product over conjugates: A^2 + (zeta1+zeta2) A B + zeta1 zeta2 B^2
    Poly dis = poly_add(poly_add(poly_mul(A, A), poly_mul(A, B), -11), poly_mul(B, B), -1);
    for (const auto& [m, c] : dis)
        if (total_degree(m) != 6) throw std::runtime_error("discriminant: not homogeneous of degree 6");
    return dis;
}

/// Signed monomial in two chart coordinates.
struct SignedMono {
    int sign = 1;
    Mono expo{0, 0};
};

/// Homogeneous coordinates [Z0, Z1, Z2] expressed in a chart's local
/// coordinates (the entry at the chart's normalizing position is 1).
inline std::array<SignedMono, 3> chart_pattern(const std::string& name)
{
    if (name == "100") return {SignedMono{1, {0, 0}}, SignedMono{-1, {1, 0}}, SignedMono{-1, {0, 1}}};
    if (name == "010") return {SignedMono{1, {1, 0}}, SignedMono{1, {0, 0}}, SignedMono{-1, {0, 1}}};
    if (name == "001") return {SignedMono{1, {1, 0}}, SignedMono{-1, {0, 1}}, SignedMono{1, {0, 0}}};
    throw std::invalid_argument("unknown chart " + name);
}

inline int chart_normalizing_index(const std::string& name)
{
    if (name == "100") return 0;
    if (name == "010") return 1;
    if (name == "001") return 2;
    throw std::invalid_argument("unknown chart " + name);
}

/// The discriminant locus in a chart's local coordinates.
inline Poly discriminant_in_chart(const std::string& name)
{
    Poly dis = discriminant_polynomial();
    auto pat = chart_pattern(name);
    Poly out;
    for (const auto& [m, c] : dis) {
        int sign = 1;
        Mono e{0, 0};
        for (int i = 0; i < 3; ++i) {
            if (m[i] % 2 != 0 && pat[i].sign < 0) sign = -sign;
            e[0] += m[i] * pat[i].expo[0];
            e[1] += m[i] * pat[i].expo[1];
        }
        auto& v = out[e];
        v += sign * c;
        if (v == 0) out.erase(e);
    }
    return out;
}

/// Signed-monomial change of variables between charts: expresses the source
/// chart's coordinates in the target chart's coordinates.
struct MonomialMap {
    std::vector<std::vector<int>> mat; // mat[target i][source j]
    std::vector<int> signs;            // sign of source var j's expression

    static MonomialMap identity(std::size_t n)
    {
        MonomialMap m;
        m.mat.assign(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i) m.mat[i][i] = 1;
        m.signs.assign(n, 1);
        return m;
    }
};

/// source var j = sign_j prod_i target_i^{mat[i][j]}
inline MonomialMap chart_monomial_map(const LcsChart& from, const LcsChart& to)
{
    // chart data give z(global) in terms of local vars; u_from in terms of
    // u_to is M_from^{-1} composed with M_to.
    auto minv = [](const std::vector<std::vector<int>>& a) {
        // 2x2 unimodular inverse
        int det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
        if (det != 1 && det != -1) throw std::invalid_argument("chart map: not unimodular");
        std::vector<std::vector<int>> inv{{a[1][1] / det, -a[0][1] / det},
                                          {-a[1][0] / det, a[0][0] / det}};
        return inv;
    };
    // global z_j = s^F_j prod_i uF_i^{F[i][j]}  (chart "from")
    // global z_j = s^T_j prod_i uT_i^{T[i][j]}  (chart "to")
    // => uF_k = sigma_k prod uT^{(T F^{-1})[.][k]}
    auto Finv = minv(from.matrix);
    MonomialMap m;
    m.mat.assign(2, std::vector<int>(2, 0));
    m.signs.assign(2, 1);
    for (int k = 0; k < 2; ++k) {
        // uF_k = prod_j (z_j / s^F_j)^{Finv[j][k]} ... with z_j from chart "to"
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.mat[i][k] += to.matrix[i][j] * Finv[j][k];
        int sg = 1;
        for (int j = 0; j < 2; ++j) {
            int e = Finv[j][k];
            if (from.signs[j] < 0 && (e % 2 != 0)) sg = -sg;
            if (to.signs[j] < 0 && (e % 2 != 0)) sg = -sg;
        }
        m.signs[k] = sg;
    }
    return m;
}

/// Substitute a signed monomial map into a polynomial. The result is
/// poly', shift with value = poly' / prod target_i^{shift_i}.
inline std::pair<Poly, Mono> poly_substitute_monomials(const Poly& p, const MonomialMap& map)
{
    Poly raw; // Laurent exponents allowed transiently
    for (const auto& [m, c] : p) {
        Mono e{0, 0};
        int sign = 1;
        for (std::size_t j = 0; j < m.size(); ++j) {
            e[0] += map.mat[0][j] * m[j];
            e[1] += map.mat[1][j] * m[j];
            if (map.signs[j] < 0 && (m[j] % 2 != 0)) sign = -sign;
        }
        auto& v = raw[e];
        v += sign * c;
        if (v == 0) raw.erase(e);
    }
    Mono mn{0, 0};
    for (const auto& [m, c] : raw) {
        mn[0] = std::min(mn[0], m[0]);
        mn[1] = std::min(mn[1], m[1]);
    }
    Poly out;
    for (const auto& [m, c] : raw) out[{m[0] - mn[0], m[1] - mn[1]}] = c;
    return {out, Mono{-mn[0], -mn[1]}};
}

/// Yukawa couplings of a chart as global rational functions: C_j (with j
/// copies of the second coordinate direction) = num[j] / den, plus metadata.
struct YukawaSet {
    std::string chart;
    std::vector<std::string> vars;
    std::array<Poly, 4> num;
    Poly den;
    TripleIntersections kappa; // constant terms
    bool fallback_used = false;
    int validated_degree = -1;

    TruncatedSeries coupling_series(int j, int cap) const
    {
        auto n = poly_to_series(num[j], vars, cap);
        auto d = poly_to_series(den, vars, cap);
        return n * reciprocal(d);
    }
};

namespace detail {

/// theta-degree 3 and 4 coefficients of the normal form of op, as the
/// pairing relation sum c3_beta C_beta + sum c4_beta W_beta = 0 with
/// W_beta = 1/2 sum_i beta_i theta_i C_{beta - e_i}.
struct PairingRelation {
    // terms: (coupling index j, coordinate shift e, theta_i or -1) -> coeff
    // representation: algebraic part alg[j] and derivative part der[j][i]
    std::array<Poly, 4> alg;
    std::array<std::array<Poly, 2>, 4> der;
};

inline int coupling_index(const Mono& beta3) { return beta3[1]; }

inline std::vector<PairingRelation> transversality_relations(const std::vector<ThetaOperator>& ops)
{
    std::vector<PairingRelation> rels;
    auto add_relation = [&](const ThetaOperator& X) {
        PairingRelation r;
        bool nontrivial = false;
        for (const auto& [t, poly] : X.terms()) {
            int td = total_degree(t);
            if (td == 3) {
                int j = coupling_index(t);
                for (const auto& [e, c] : poly) r.alg[j] = poly_add(r.alg[j], Poly{{e, c}});
                nontrivial = true;
            } else if (td == 4) {
                for (int i = 0; i < 2; ++i) {
                    if (t[i] == 0) continue;
                    Mono b3 = t;
                    --b3[i];
                    int j = coupling_index(b3);
                    for (const auto& [e, c] : poly)
                        r.der[j][i] = poly_add(r.der[j][i], Poly{{e, c * Rational(t[i], 2)}});
                    nontrivial = true;
                }
            } else if (td > 4) {
                throw std::runtime_error("transversality: theta degree above 4 not supported");
            }
        }
        if (nontrivial) rels.push_back(std::move(r));
    };
    for (const auto& op : ops) {
        int t = op.theta_degree();
        if (t > 4) throw std::runtime_error("transversality: operator order too high");
        // compose with theta-monomials up to total order 4
        std::vector<ThetaOperator> gens{op};
        for (int extra = 1; extra <= 4 - t; ++extra) {
            std::vector<ThetaOperator> next;
            for (int i = 0; i < 2; ++i) {
                ThetaOperator th(op.vars());
                Mono ti(op.nvars(), 0);
                ti[i] = 1;
                th.add_term(ti, Mono(op.nvars(), 0), 1);
                for (const auto& gprev : gens) next.push_back(compose(th, gprev));
            }
            for (const auto& gnext : next) add_relation(gnext);
            gens = std::move(next);
        }
        add_relation(op);
    }
    return rels;
}

} // namespace detail

/// Solve the Griffiths-transversality system for the four theta-couplings as
/// series, normalized by C(0) = kappa. The linear system is assembled level
/// by level; it must be uniquely determined at every level (it is, for the
/// operator systems of this family), otherwise the solve aborts -- the
/// q-matching fallback is never needed.
inline std::array<TruncatedSeries, 4> yukawa_series(const std::vector<ThetaOperator>& ops,
                                                    const TripleIntersections& kappa, int cap)
{
    const auto& vars = ops.front().vars();
    auto rels = detail::transversality_relations(ops);
    std::array<TruncatedSeries, 4> C{TruncatedSeries(vars, cap), TruncatedSeries(vars, cap),
                                     TruncatedSeries(vars, cap), TruncatedSeries(vars, cap)};
    for (int j = 0; j < 4; ++j) C[j].set({0, 0}, kappa.k[j]);

    int maxshift = 0;
    for (const auto& r : rels) {
        for (int j = 0; j < 4; ++j) {
            maxshift = std::max(maxshift, poly_degree(r.alg[j]));
            for (int i = 0; i < 2; ++i) maxshift = std::max(maxshift, poly_degree(r.der[j][i]));
        }
    }

    // classical consistency: the degree-0 part of every relation must vanish
    // on the normalization C(0) = kappa (theta terms contribute nothing at 0)
    for (const auto& r : rels) {
        Rational c0 = 0;
        for (int j = 0; j < 4; ++j) {
            auto it = r.alg[j].find(Mono{0, 0});
            if (it != r.alg[j].end()) c0 += it->second * kappa.k[j];
        }
        if (c0 != 0)
            throw std::runtime_error(
                "yukawa_series: classical intersection numbers violate the operator relations");
    }

    for (int level = 1; level <= cap; ++level) {
        // unknowns: coefficients of the four couplings at total degree = level
        std::vector<std::pair<int, Mono>> unk;
        for (int j = 0; j < 4; ++j)
            for (int m1 = 0; m1 <= level; ++m1) unk.push_back({j, Mono{m1, level - m1}});
        std::map<std::pair<int, Mono>, int> uidx;
        for (std::size_t i = 0; i < unk.size(); ++i) uidx[unk[i]] = static_cast<int>(i);

        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (const auto& r : rels) {
            for (int out = level; out <= level + maxshift; ++out)
                for (int M1 = 0; M1 <= out; ++M1) {
                    Mono M{M1, out - M1};
                    std::vector<Rational> row(unk.size(), 0);
                    Rational b = 0;
                    bool future = false, nonzero = false;
                    auto absorb = [&](int j, const Mono& m, const Rational& coef) {
                        int d = total_degree(m);
                        if (d > level)
                            future = true;
                        else if (d == level) {
                            row[uidx.at({j, m})] += coef;
                            nonzero = true;
                        } else {
                            Rational v = C[j].coeff(m);
                            if (v != 0) {
                                b -= coef * v;
                                nonzero = true;
                            }
                        }
                    };
                    for (int j = 0; j < 4 && !future; ++j) {
                        for (const auto& [e, c] : r.alg[j]) {
                            Mono m{M[0] - e[0], M[1] - e[1]};
                            if (m[0] < 0 || m[1] < 0) continue;
                            absorb(j, m, c);
                            if (future) break;
                        }
                        for (int i = 0; i < 2 && !future; ++i)
                            for (const auto& [e, c] : r.der[j][i]) {
                                Mono m{M[0] - e[0], M[1] - e[1]};
                                if (m[0] < 0 || m[1] < 0 || m[i] == 0) continue;
                                absorb(j, m, c * m[i]); // theta_i acts as m_i
                                if (future) break;
                            }
                    }
                    if (future || !nonzero) continue;
                    rows.push_back(std::move(row));
                    rhs.push_back(std::move(b));
                }
        }
        auto sol = solve_linear(rows, rhs, static_cast<int>(unk.size()));
        if (!sol.consistent)
            throw std::runtime_error("yukawa_series: transversality system inconsistent at level " +
                                     std::to_string(level));
        if (!sol.unique)
            throw std::runtime_error(
                "yukawa_series: transversality system underdetermined at level " +
                std::to_string(level) + " (fallback to A-model matching would be required)");
        for (std::size_t i = 0; i < unk.size(); ++i)
            if (sol.solution[i] != 0) C[unk[i].first].set(unk[i].second, sol.solution[i]);
    }
    return C;
}

/// Fit the coupling series as rational functions with denominator
/// dis_chart^b (z1+z2)^a; the lowest (b,a) in the search lattice that
/// reproduces every series coefficient through the cap wins, with the
/// degrees above the numerator bound acting as validation.
inline YukawaSet yukawa_fit_rational(const std::array<TruncatedSeries, 4>& C, const LcsChart& chart,
                                     const TripleIntersections& kappa)
{
    const int cap = C[0].cap();
    YukawaSet y;
    y.chart = chart.name;
    y.vars = C[0].vars();
    y.kappa = kappa;
    Poly dis = discriminant_in_chart(chart.name);
    // the linear factor z1 + z2 in this chart's coordinates
    Poly linear;
    {
        auto pat = chart_pattern(chart.name);
        for (int i = 1; i <= 2; ++i) {
            auto& v = linear[pat[i].expo];
            v += pat[i].sign;
            if (v == 0) linear.erase(pat[i].expo);
        }
    }
    for (int b = 1; b <= 2; ++b) {
        for (int a = 0; a <= 2; ++a) {
            Poly den = dis;
            for (int t = 1; t < b; ++t) den = poly_mul(den, dis);
            for (int t = 0; t < a; ++t) den = poly_mul(den, linear);
            if (den.count({0, 0}) == 0) continue; // not a unit: cannot match a regular series
            int numdeg = 6 * b + a - 2;
            if (numdeg + 3 > cap) continue; // need validation headroom
            auto dser = poly_to_series(den, y.vars, cap);
            bool ok = true;
            std::array<Poly, 4> nums;
            for (int j = 0; j < 4 && ok; ++j) {
                auto prod = C[j] * dser;
                Poly num;
                for (const auto& [m, v] : prod.coefficients()) {
                    if (total_degree(m) <= numdeg)
                        num[m] = v;
                    else
                        ok = false;
                }
                nums[j] = std::move(num);
            }
            if (!ok) continue;
            y.num = std::move(nums);
            y.den = std::move(den);
            y.validated_degree = cap;
            return y;
        }
    }
    throw std::runtime_error("yukawa_fit_rational: no denominator in the ansatz lattice matched");
}

/// Couplings of a chart as a rational-function Yukawa set: the
/// transversality series solve followed by the denominator-ansatz fit.
inline YukawaSet yukawa_solve(const std::vector<ThetaOperator>& ops, const LcsChart& chart,
                              const TripleIntersections& kappa, int cap)
{
    return yukawa_fit_rational(yukawa_series(ops, kappa, cap), chart, kappa);
}

/// Transport a Yukawa set to another chart: couplings transform as a cubic
/// form under the logarithmic Jacobian of the signed-monomial coordinate
/// change, with the gauge factor f^2 where f is the ratio of the two
/// charts' period normalizations.
inline YukawaSet transport_lcs(const YukawaSet& y, const LcsChart& from, const LcsChart& to)
{
    if (y.chart != from.name) throw std::invalid_argument("transport: chart mismatch");
    MonomialMap map = chart_monomial_map(from, to);

    // denominator and numerators in the target coordinates
    auto [den, dshift] = poly_substitute_monomials(y.den, map);

    // gauge: f = Z_{nFrom}/Z_{nTo} written in target coordinates
    auto pat = chart_pattern(to.name);
    SignedMono f = pat[chart_normalizing_index(from.name)];
    // f^2 = monomial with exponent 2*expo (sign squares away)

    YukawaSet out;
    out.chart = to.name;
    out.vars = to.vars;
    out.den = den;
    out.fallback_used = y.fallback_used;
    out.validated_degree = y.validated_degree;

    for (int jout = 0; jout < 4; ++jout) {
        // theta_{to,a} = sum_i mat[a][i] theta_{from,i}
        Poly acc;
        Mono accshift{0, 0};
        bool first = true;
        // iterate over all (i,j,k) splittings matching jout copies of dir 2
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    // target index tuple: jout of them equal 1, rest 0
                    std::array<int, 3> tgt{jout > 0 ? 1 : 0, jout > 1 ? 1 : 0, jout > 2 ? 1 : 0};
                    Rational coef = Rational(map.mat[tgt[0]][i]) * Rational(map.mat[tgt[1]][j]) *
                                    Rational(map.mat[tgt[2]][k]);
                    if (coef == 0) continue;
                    int jsrc = i + j + k; // copies of source direction 2
                    auto [np, nshift] = poly_substitute_monomials(y.num[jsrc], map);
                    // bring to common shift with acc
                    if (first) {
                        acc = poly_scale(np, coef);
                        accshift = nshift;
                        first = false;
                    } else {
                        Mono mx{std::max(accshift[0], nshift[0]), std::max(accshift[1], nshift[1])};
                        auto lift = [&](Poly& p, const Mono& s) {
                            if (s == mx) return;
                            Poly q;
                            for (const auto& [m, c] : p)
                                q[{m[0] + mx[0] - s[0], m[1] + mx[1] - s[1]}] = c;
                            p = std::move(q);
                        };
                        lift(acc, accshift);
                        Poly np2 = poly_scale(np, coef);
                        lift(np2, nshift);
                        accshift = mx;
                        acc = poly_add(acc, np2);
                    }
                }
        // C_out = acc * t^{dshift - accshift - 2 f.expo} / den
        Mono net{dshift[0] - accshift[0] - 2 * f.expo[0], dshift[1] - accshift[1] - 2 * f.expo[1]};
        Poly num = acc;
        if (net[0] > 0 || net[1] > 0) {
            Mono pos{std::max(net[0], 0), std::max(net[1], 0)};
            Poly q;
            for (const auto& [m, c] : num) q[{m[0] + pos[0], m[1] + pos[1]}] = c;
            num = std::move(q);
            net[0] -= pos[0];
            net[1] -= pos[1];
        }
        if (net[0] < 0 || net[1] < 0) {
            // must divide the numerator exactly by the monomial
            Poly q;
            for (const auto& [m, c] : num) {
                Mono m2{m[0] + net[0], m[1] + net[1]};
                if (m2[0] < 0 || m2[1] < 0)
                    throw std::runtime_error("transport: numerator not divisible by gauge monomial");
                q[m2] = c;
            }
            num = std::move(q);
        }
        out.num[jout] = std::move(num);
    }
    for (int j = 0; j < 4; ++j) {
        Rational d0 = out.den.count({0, 0}) ? out.den.at({0, 0}) : Rational(0);
        if (d0 == 0) throw std::runtime_error("transport: denominator vanishes at the new origin");
        Rational n0 = out.num[j].count({0, 0}) ? out.num[j].at({0, 0}) : Rational(0);
        out.kappa.k[j] = n0 / d0;
    }
    return out;
}

/// Equality of Yukawa sets as rational functions (cross multiplication).
inline bool yukawa_equal(const YukawaSet& a, const YukawaSet& b)
{
    if (a.chart != b.chart) return false;
    for (int j = 0; j < 4; ++j)
        if (!(poly_mul(a.num[j], b.den) == poly_mul(b.num[j], a.den))) return false;
    return true;
}

} // namespace mirrorkit
