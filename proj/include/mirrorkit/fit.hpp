#pragma once

#include <mirrorkit/linalg.hpp>
#include <mirrorkit/theta_op.hpp>

namespace mirrorkit {

namespace detail {

inline std::vector<Mono> monomials_up_to(std::size_t nvars, int deg)
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
    for (int d = 0; d <= deg; ++d) rec(0, d);
    return out;
}

} // namespace detail

/// Find all operators sum c_{alpha,e} z^e theta^alpha with
/// |alpha| <= theta_degree_bound and |e| <= coeff_degree_bound annihilating s
/// through its cap. Returns a nullspace basis, each element scaled to
/// coprime integer coefficients with a positive leading coefficient.
///
/// The linear conditions run over every output monomial of total degree up
/// to s.cap(): with non-negative coefficient exponents the action there is
/// exact. A 2x condition/unknown margin is required so that the nullspace is
/// trustworthy rather than an artifact of truncation.
inline std::vector<ThetaOperator> fit_operator(const TruncatedSeries& s, int theta_degree_bound,
                                               int coeff_degree_bound)
{
    const auto thetas = detail::monomials_up_to(s.nvars(), theta_degree_bound);
    const auto coeffs = detail::monomials_up_to(s.nvars(), coeff_degree_bound);
    const auto targets = detail::monomials_up_to(s.nvars(), s.cap());
    const std::size_t nunk = thetas.size() * coeffs.size();
    if (targets.size() < 2 * nunk)
        throw std::runtime_error("fit_operator: insufficient data (need conditions >= 2 x unknowns)");

    std::vector<std::vector<Rational>> rows;
    rows.reserve(targets.size());
    Mono m(s.nvars());
    for (const auto& M : targets) {
        std::vector<Rational> row;
        row.reserve(nunk);
        bool nonzero = false;
        for (const auto& t : thetas)
            for (const auto& e : coeffs) {
                bool ok = true;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = M[i] - e[i];
                    if (m[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                Rational v = 0;
                if (ok) {
                    v = s.coeff(m);
                    for (std::size_t i = 0; i < m.size() && v != 0; ++i)
                        for (int j = 0; j < t[i]; ++j) v *= m[i];
                }
                nonzero = nonzero || v != 0;
                row.push_back(std::move(v));
            }
        if (nonzero) rows.push_back(std::move(row));
    }

    auto basis = nullspace(rows, static_cast<int>(nunk));
    if (basis.empty()) throw std::runtime_error("fit_operator: empty nullspace (no operator of that shape)");

    std::vector<ThetaOperator> ops;
    for (const auto& v : basis) {
        ThetaOperator op(s.vars());
        std::size_t k = 0;
        for (const auto& t : thetas)
            for (const auto& e : coeffs) {
                if (v[k] != 0) op.add_term(t, e, v[k]);
                ++k;
            }
        ops.push_back(op.normalized());
    }
    return ops;
}

/// Coefficient vector of op in the (theta, coeff) unknown basis used by
/// fit_operator; for nullspace-membership tests.
inline std::vector<Rational> operator_coordinates(const ThetaOperator& op, int theta_degree_bound,
                                                  int coeff_degree_bound)
{
    const auto thetas = detail::monomials_up_to(op.nvars(), theta_degree_bound);
    const auto coeffs = detail::monomials_up_to(op.nvars(), coeff_degree_bound);
    std::vector<Rational> v;
    v.reserve(thetas.size() * coeffs.size());
    for (const auto& t : thetas)
        for (const auto& e : coeffs) {
            auto it = op.terms().find(t);
            if (it == op.terms().end())
                v.push_back(0);
            else {
                auto jt = it->second.find(e);
                v.push_back(jt == it->second.end() ? Rational(0) : jt->second);
            }
        }
    return v;
}

/// fit_operator coordinates of op's terms fall inside the bounds?
inline bool fits_shape(const ThetaOperator& op, int theta_degree_bound, int coeff_degree_bound)
{
    return op.theta_degree() <= theta_degree_bound && op.coord_degree_max() <= coeff_degree_bound;
}

} // namespace mirrorkit
