#pragma once

#include <mirrorkit/ambient.hpp>
#include <mirrorkit/bps.hpp>
#include <mirrorkit/periods.hpp>

namespace mirrorkit {

/// Laurent polynomial in the equivariant parameter z with ring-class
/// coefficients.
using ZLaurent = std::map<int, RingClass>;

inline ZLaurent zl_mul(const GradedRing& g, const ZLaurent& a, const ZLaurent& b)
{
    ZLaurent out;
    for (const auto& [za, ca] : a)
        for (const auto& [zb, cb] : b) {
            RingClass p = g.mul(ca, cb);
            if (p.is_zero()) continue;
            auto it = out.find(za + zb);
            if (it == out.end())
                out[za + zb] = p;
            else {
                it->second += p;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

/// prod_{m=1}^{d} (div + m z)^power as a Laurent polynomial over the ring of
/// div (a nilpotent degree-2 class plus the stated z-shifts).
inline ZLaurent twist_factor(const GradedRing& g, const RingClass& div, int d, int power)
{
    ZLaurent out{{0, g.one()}};
    for (int m = 1; m <= d; ++m) {
        ZLaurent f{{0, div}, {1, Rational(m) * g.one()}};
        for (int p = 0; p < power; ++p) out = zl_mul(g, out, f);
    }
    return out;
}

/// prod_{m=1}^{d} (div + m z)^{-power} expanded as a Laurent polynomial
/// (finite because div is nilpotent). Used for J-functions of projective
/// spaces and their products.
inline ZLaurent j_projective_factor(const GradedRing& g, const RingClass& div, int d, int power)
{
    ZLaurent out{{0, g.one()}};
    for (int m = 1; m <= d; ++m) {
        // (div + m z)^{-power} = sum_j C(-power, j) div^j (m z)^{-power-j}
        ZLaurent f;
        RingClass divj = g.one();
        for (int j = 0;; ++j) {
            if (j > 0) {
                divj = g.mul(divj, div);
                if (divj.is_zero()) break;
            }
            Rational c = Rational((j % 2 ? -1 : 1) * binomial(power - 1 + j, power - 1));
            Integer md = 1;
            for (int t = 0; t < power + j; ++t) md *= m;
            f[-(power + j)] = (c / Rational(md)) * divj;
        }
        out = zl_mul(g, out, f);
    }
    return out;
}

namespace detail {

/// Polynomials in the two Chern roots (x1,x2) of the dual tautological
/// bundle on G(2,5), with z-Laurent scalar coefficients, truncated at
/// x-total-degree 8 (one above twice the Grassmannian dimension in divisor
/// units that survives reduction, plus the Vandermonde).
struct XZPoly {
    static constexpr int xcap = 8;
    std::map<std::pair<int, int>, std::map<int, Rational>> c;

    void add(int a, int b, int z, const Rational& v)
    {
        if (a + b > xcap || v == 0) return;
        auto& slot = c[{a, b}][z];
        slot += v;
        if (slot == 0) {
            c[{a, b}].erase(z);
            if (c[{a, b}].empty()) c.erase({a, b});
        }
    }
};

inline XZPoly xz_mul(const XZPoly& f, const XZPoly& g)
{
    XZPoly h;
    for (const auto& [mf, zf] : f.c)
        for (const auto& [mg, zg] : g.c) {
            int a = mf.first + mg.first, b = mf.second + mg.second;
            if (a + b > XZPoly::xcap) continue;
            for (const auto& [z1, c1] : zf)
                for (const auto& [z2, c2] : zg) h.add(a, b, z1 + z2, c1 * c2);
        }
    return h;
}

/// (x_i + m z)^{-5} truncated in x-degree.
inline XZPoly chern_root_inverse_pow5(int which, int m)
{
    XZPoly f;
    for (int j = 0; j <= XZPoly::xcap; ++j) {
        Integer md = 1;
        for (int t = 0; t < 5 + j; ++t) md *= m;
        Rational c = Rational((j % 2 ? -1 : 1) * binomial(4 + j, 4)) / Rational(md);
        f.add(which == 1 ? j : 0, which == 1 ? 0 : j, -(5 + j), c);
    }
    return f;
}

} // namespace detail

/// Degree-d coefficient of the small J-function of G(2,5), computed by the
/// abelian/nonabelian correspondence over P4 x P4: sum over (d1,d2) with
/// d1+d2 = d of the Weyl-shifted factor (x1 - x2 + (d1-d2)z) times
/// prod (x_i + m z)^{-5}, divided by the Vandermonde x1 - x2, reduced to the
/// Schubert basis (two-row Schur classes with first part > 3 vanish), with
/// the overall sign (-1)^d. The convention is pinned by the requirement
/// that the twisted z^0 series reproduces the Gamma_1(5) period; see
/// assert_gamma1_5_convention.
inline ZLaurent grassmannian_j(const GradedRing& g25, int d)
{
    detail::XZPoly total;
    for (int d1 = 0; d1 <= d; ++d1) {
        int d2 = d - d1;
        detail::XZPoly t;
        t.add(1, 0, 0, 1);
        t.add(0, 1, 0, -1);
        if (d1 != d2) t.add(0, 0, 1, d1 - d2);
        for (int m = 1; m <= d1; ++m) t = detail::xz_mul(t, detail::chern_root_inverse_pow5(1, m));
        for (int m = 1; m <= d2; ++m) t = detail::xz_mul(t, detail::chern_root_inverse_pow5(2, m));
        for (const auto& [mono, zc] : t.c)
            for (const auto& [z, v] : zc) total.add(mono.first, mono.second, z, v);
    }
    // divide the antisymmetric polynomial by x1 - x2:
    // (x1^a x2^b - x1^b x2^a)/(x1-x2) = schur_(a-1,b), and schur classes with
    // first part > 3 lie in the defining ideal of H*(G(2,5))
    const auto parts = detail::g25_partitions();
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t i = 0; i < parts.size(); ++i) idx[parts[i]] = static_cast<int>(i);
    ZLaurent out;
    Rational sign = d % 2 ? -1 : 1;
    for (const auto& [mono, zc] : total.c) {
        auto [a, b] = mono;
        if (a < b) continue; // antisymmetric partner handled at (b,a)
        if (a == b) {
            for (const auto& [z, v] : zc)
                if (v != 0) throw std::runtime_error("grassmannian_j: diagonal term survived");
            continue;
        }
        // check antisymmetry against the mirror monomial
        auto mirror = total.c.find({b, a});
        for (const auto& [z, v] : zc) {
            Rational mv = 0;
            if (mirror != total.c.end()) {
                auto it = mirror->second.find(z);
                if (it != mirror->second.end()) mv = it->second;
            }
            if (mv != -v) throw std::runtime_error("grassmannian_j: antisymmetry violated");
        }
        if (a - 1 > 3) continue; // ideal reduction
        int bi = idx.at({a - 1, b});
        for (const auto& [z, v] : zc) {
            auto& slot = out[z];
            if (slot.ring() == nullptr) slot = RingClass(&g25);
            slot.add(bi, sign * v);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Convention check for grassmannian_j: the z^0 identity component of
/// prod_{m<=d}(sigma_1 + m z)^5 J_d must equal the Gamma_1(5) period
/// coefficient A_d. Throws if the convention is broken.
inline void assert_gamma1_5_convention(const GradedRing& g25, int dmax)
{
    for (int d = 0; d <= dmax; ++d) {
        ZLaurent tw = twist_factor(g25, g25.basis(1), d, 5);
        ZLaurent p = zl_mul(g25, tw, grassmannian_j(g25, d));
        Rational z0 = 0;
        auto it = p.find(0);
        if (it != p.end()) z0 = it->second.coord(0);
        if (z0 != Rational(apery_gamma1_5(d)))
            throw std::runtime_error("grassmannian_j: Gamma_1(5) convention check failed at d=" +
                                     std::to_string(d));
    }
}

/// Novikov-graded cohomology-valued series: for each curve multi-degree a
/// Laurent polynomial in z with ring-class coefficients, z-powers kept in
/// [-zcap, 0].
struct CohomologySeries {
    const GradedRing* ring = nullptr;
    std::vector<std::string> novikov;
    int cap = 0;
    int zcap = 3;
    std::map<Mono, ZLaurent> terms;
};

/// Restricted I-function of X1 with Novikov degrees (d1,d2): the coefficient
/// is prod_{m<=d}(L+mz)^8 J^{Gr}_d J^{P2xP2}_{d1,d2} in the ambient ring of
/// the resolved join, d = d1+d2. Positive z-powers cancel identically
/// (checked), and the z^0 part reproduces the two-variable period series
/// (checked on construction).
inline CohomologySeries i_function_x1(const AmbientX1& amb, int cap)
{
    const GradedRing& g = amb.ring();
    CohomologySeries I;
    I.ring = &g;
    I.novikov = {"x1", "x2"};
    I.cap = cap;
    auto expected_z0 = period_x1(cap);

    for (int d = 0; d <= cap; ++d) {
        // shared per total degree
        ZLaurent twist = twist_factor(g, amb.L, d, 8);
        ZLaurent jgr_small = grassmannian_j(amb.g25, d);
        ZLaurent jgr;
        for (const auto& [z, cls] : jgr_small) {
            RingClass lifted(&g);
            for (const auto& [i, v] : cls.coords())
                lifted.add(amb.bundle.index(0, amb.base.index(amb.gp.index(i, 0), 0)), v);
            jgr[z] = lifted;
        }
        ZLaurent shared = zl_mul(g, twist, jgr);
        for (int d1 = 0; d1 <= d; ++d1) {
            int d2 = d - d1;
            ZLaurent jpp = zl_mul(g, j_projective_factor(g, amb.h[0], d1, 3),
                                  j_projective_factor(g, amb.h[1], d2, 3));
            ZLaurent coeff = zl_mul(g, shared, jpp);
            ZLaurent kept;
            for (const auto& [z, cls] : coeff) {
                if (z > 0) throw std::runtime_error("i_function_x1: positive z-power survived");
                if (z >= -I.zcap) kept[z] = cls;
            }
            // z^0 part must be the period coefficient times the identity
            Rational z0 = 0;
            auto it = kept.find(0);
            if (it != kept.end()) z0 = it->second.coord(0);
            if (z0 != expected_z0.coeff({d1, d2}))
                throw std::runtime_error("i_function_x1: z^0 component differs from the period");
            I.terms[{d1, d2}] = std::move(kept);
        }
    }
    return I;
}

/// Restricted I-function of X0 (single Novikov degree d): coefficient
/// prod_{m<=d}(L+mz)^10 J^{Gr}_d x J^{Gr}_d in the ambient ring of the
/// resolved join of two Grassmannians. z^0 part is sum A_d^2 x^d (checked).
inline CohomologySeries i_function_x0(const AmbientX0& amb, int cap)
{
    const GradedRing& g = amb.ring();
    CohomologySeries I;
    I.ring = &g;
    I.novikov = {"x"};
    I.cap = cap;
    auto expected_z0 = period_x0(cap);

    for (int d = 0; d <= cap; ++d) {
        ZLaurent jgr_small = grassmannian_j(amb.g25, d);
        ZLaurent j1, j2;
        for (const auto& [z, cls] : jgr_small) {
            RingClass l1(&g), l2(&g);
            for (const auto& [i, v] : cls.coords()) {
                l1.add(amb.bundle.index(0, amb.base.index(i, 0)), v);
                l2.add(amb.bundle.index(0, amb.base.index(0, i)), v);
            }
            j1[z] = l1;
            j2[z] = l2;
        }
        ZLaurent coeff = zl_mul(g, twist_factor(g, amb.L, d, 10), zl_mul(g, j1, j2));
        ZLaurent kept;
        for (const auto& [z, cls] : coeff) {
            if (z > 0) throw std::runtime_error("i_function_x0: positive z-power survived");
            if (z >= -I.zcap) kept[z] = cls;
        }
        Rational z0 = 0;
        auto it = kept.find(0);
        if (it != kept.end()) z0 = it->second.coord(0);
        if (z0 != expected_z0.coeff({d}))
            throw std::runtime_error("i_function_x0: z^0 component differs from the period");
        I.terms[{d}] = std::move(kept);
    }
    return I;
}

/// Output of the mirror transformation.
struct MirrorTransformed {
    TruncatedSeries I0;                  // z^0 identity component, in x
    std::vector<TruncatedSeries> tau;    // log(q_a/x_a) as series in x
    std::vector<TruncatedSeries> x_of_q; // inverse mirror map, series in q
    CohomologySeries J;                  // I/I0 re-expanded in q
};

namespace detail {

inline std::vector<std::string> q_names(std::size_t k)
{
    if (k == 1) return {"q"};
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= k; ++i) v.push_back("q" + std::to_string(i));
    return v;
}

} // namespace detail

/// Normalize an I-function: I0 and the divisor-valued z^{-1} corrections
/// give the mirror map q_a = x_a exp(tau_a/1); J = I/I0 re-expanded in q.
/// divisor_components must return the coefficients of the restriction of a
/// degree-2 ambient class on the divisor basis.
inline MirrorTransformed
mirror_transform(const CohomologySeries& I,
                 const std::function<std::vector<Rational>(const RingClass&)>& divisor_components)
{
    const std::size_t nd = I.novikov.size();
    const int cap = I.cap;
    MirrorTransformed out;
    out.I0 = TruncatedSeries(I.novikov, cap);
    std::vector<TruncatedSeries> corr(nd, TruncatedSeries(I.novikov, cap));
    for (const auto& [m, zl] : I.terms) {
        auto z0 = zl.find(0);
        if (z0 != zl.end()) out.I0.add_to(m, z0->second.coord(0));
        auto z1 = zl.find(-1);
        if (z1 != zl.end() && total_degree(m) > 0) {
            auto comp = divisor_components(z1->second);
            for (std::size_t a = 0; a < nd; ++a) corr[a].add_to(m, comp[a]);
        }
    }
    if (out.I0.constant_term() != 1)
        throw std::invalid_argument("mirror_transform: leading term is not 1");
    auto invI0 = reciprocal(out.I0);
    for (std::size_t a = 0; a < nd; ++a) out.tau.push_back(corr[a] * invI0);

    // invert q_a = x_a exp(tau_a(x)) by fixed-point iteration in q
    auto qv = detail::q_names(nd);
    std::vector<TruncatedSeries> x(nd);
    for (std::size_t a = 0; a < nd; ++a) x[a] = TruncatedSeries::variable(qv, cap, a);
    for (int it = 0; it <= cap; ++it) {
        std::vector<TruncatedSeries> nx(nd);
        for (std::size_t a = 0; a < nd; ++a) {
            auto t = substitute(out.tau[a], x);
            nx[a] = TruncatedSeries::variable(qv, cap, a) * exp_series(Rational(-1) * t);
        }
        x = std::move(nx);
    }
    // round trip check: x_a(q) exp(tau_a(x(q))) = q_a
    for (std::size_t a = 0; a < nd; ++a) {
        auto q = x[a] * exp_series(substitute(out.tau[a], x));
        if (!(q == TruncatedSeries::variable(qv, cap, a)))
            throw std::runtime_error("mirror_transform: mirror map inversion failed");
    }
    out.x_of_q = x;

    // J = (I / I0)(x(q)) componentwise
    out.J.ring = I.ring;
    out.J.novikov = qv;
    out.J.cap = cap;
    out.J.zcap = I.zcap;
    for (int z = 0; z >= -I.zcap; --z) {
        // collect scalar series per basis index
        std::map<int, TruncatedSeries> comp;
        for (const auto& [m, zl] : I.terms) {
            auto it = zl.find(z);
            if (it == zl.end()) continue;
            for (const auto& [bi, v] : it->second.coords()) {
                auto slot = comp.find(bi);
                if (slot == comp.end())
                    slot = comp.emplace(bi, TruncatedSeries(I.novikov, cap)).first;
                slot->second.add_to(m, v);
            }
        }
        for (auto& [bi, ser] : comp) {
            auto in_q = substitute(ser * invI0, x);
            for (const auto& [m, v] : in_q.coefficients()) {
                auto& zl = out.J.terms[m];
                auto slot = zl.find(z);
                if (slot == zl.end()) {
                    RingClass c(I.ring);
                    c.add(bi, v);
                    zl[z] = c;
                } else
                    slot->second.add(bi, v);
            }
        }
    }
    return out;
}

/// Extract genus-0 invariants from a normalized J-function: pair the z^{-2}
/// component with each divisor to read off the t-derivatives of the
/// prepotential, drop the classical polynomial part, and solve
/// sum_beta N_beta beta_a q^beta. The extractions from different divisors
/// must agree.
inline GWTable gw_from_j(const CohomologySeries& J,
                         const std::function<Rational(const RingClass&, int)>& pair_divisor,
                         const std::function<Rational(const RingClass&, int, int)>& pair_two_divisors,
                         const std::function<std::vector<Rational>(const RingClass&)>& divisor_components,
                         const std::function<Rational(int, int, int)>& kappa)
{
    const std::size_t nd = J.novikov.size();
    const int cap = J.cap;
    // c_a(q): divisor components of the z^{-1} part (equals tau_a(x(q)))
    std::vector<TruncatedSeries> c(nd, TruncatedSeries(J.novikov, cap));
    std::vector<std::vector<TruncatedSeries>> phi(
        nd, std::vector<TruncatedSeries>(nd, TruncatedSeries(J.novikov, cap)));
    std::vector<TruncatedSeries> g2(nd, TruncatedSeries(J.novikov, cap));
    for (const auto& [m, zl] : J.terms) {
        auto z1 = zl.find(-1);
        if (z1 != zl.end()) {
            auto comp = divisor_components(z1->second);
            for (std::size_t a = 0; a < nd; ++a) {
                c[a].add_to(m, comp[a]);
                for (std::size_t b = 0; b < nd; ++b)
                    phi[a][b].add_to(m, pair_two_divisors(z1->second, static_cast<int>(a),
                                                          static_cast<int>(b)));
            }
        }
        auto z2 = zl.find(-2);
        if (z2 != zl.end())
            for (std::size_t a = 0; a < nd; ++a)
                g2[a].add_to(m, pair_divisor(z2->second, static_cast<int>(a)));
    }
    // the z^{-1} part restricts to sum_c c_c D_c, so the pairings must obey
    // phi[a][b] = sum_c c_c kappa(a,b,c); a failure means a convention bug
    for (std::size_t a = 0; a < nd; ++a)
        for (std::size_t b = 0; b < nd; ++b) {
            TruncatedSeries acc(J.novikov, cap);
            for (std::size_t cc = 0; cc < nd; ++cc)
                acc += c[cc] * kappa(static_cast<int>(a), static_cast<int>(b), static_cast<int>(cc));
            if (!(acc == phi[a][b]))
                throw std::runtime_error("gw_from_j: z^{-1} divisor pairing identity failed");
        }

    GWTable N;
    std::vector<TruncatedSeries> E(nd, TruncatedSeries(J.novikov, cap));
    for (std::size_t a = 0; a < nd; ++a) {
        E[a] = g2[a];
        for (std::size_t b = 0; b < nd; ++b) E[a] -= c[b] * phi[a][b];
        for (std::size_t b = 0; b < nd; ++b)
            for (std::size_t cc = 0; cc < nd; ++cc)
                E[a] += Rational(1, 2) * kappa(static_cast<int>(a), static_cast<int>(b), static_cast<int>(cc)) *
                        (c[b] * c[cc]);
    }
    // collect N_beta = E_a[beta]/beta_a, consistent across a
    std::map<Mono, Rational> found;
    for (std::size_t a = 0; a < nd; ++a)
        for (const auto& [m, v] : E[a].coefficients()) {
            if (total_degree(m) == 0) {
                if (v != 0) throw std::runtime_error("gw_from_j: constant term in instanton part");
                continue;
            }
            if (m[a] == 0) continue;
            Rational Nb = v / m[a];
            auto it = found.find(m);
            if (it == found.end())
                found[m] = Nb;
            else if (it->second != Nb)
                throw std::runtime_error("gw_from_j: inconsistent N_beta across divisor pairings");
        }
    // betas reached by only one pairing (component zero) were still recorded;
    // betas with E identically zero get N = 0 and are omitted
    for (auto& [m, v] : found)
        if (v != 0) N[m] = v;
    return N;
}

} // namespace mirrorkit
