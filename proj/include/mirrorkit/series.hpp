#pragma once

#include <mirrorkit/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirrorkit {

/// Exponent multi-index. Entries are non-negative for series monomials;
/// operator coordinate changes use negative entries transiently.
using Mono = std::vector<int>;

inline int total_degree(const Mono& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Multivariate power series over Rational, truncated by total degree.
///
/// Invariants: every stored monomial has total degree <= cap and a nonzero
/// coefficient; absent monomials are zero. Arithmetic between two series
/// requires identical variable lists and truncates to the minimum cap.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::string> vars, int cap)
        : vars_(std::move(vars)), cap_(cap)
    {
        if (cap < 0) throw std::invalid_argument("negative cap");
    }

    static TruncatedSeries constant(std::vector<std::string> vars, int cap, const Rational& c)
    {
        TruncatedSeries s(std::move(vars), cap);
        s.set(Mono(s.nvars(), 0), c);
        return s;
    }
    static TruncatedSeries one(std::vector<std::string> vars, int cap)
    {
        return constant(std::move(vars), cap, 1);
    }
    static TruncatedSeries variable(std::vector<std::string> vars, int cap, std::size_t i)
    {
        TruncatedSeries s(std::move(vars), cap);
        Mono m(s.nvars(), 0);
        m.at(i) = 1;
        s.set(m, 1);
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    int cap() const { return cap_; }
    const std::map<Mono, Rational>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(const Mono& m) const
    {
        auto it = c_.find(m);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(const Mono& m, const Rational& v)
    {
        if (m.size() != nvars()) throw std::invalid_argument("monomial arity mismatch");
        for (int e : m)
            if (e < 0) throw std::invalid_argument("negative exponent");
        if (total_degree(m) > cap_) return;
        if (v == 0)
            c_.erase(m);
        else
            c_[m] = v;
    }

    void add_to(const Mono& m, const Rational& v) { set(m, coeff(m) + v); }

    Rational constant_term() const { return coeff(Mono(nvars(), 0)); }

    /// Drop every monomial of total degree > new_cap and lower the cap.
    TruncatedSeries truncated(int new_cap) const
    {
        TruncatedSeries r(vars_, std::min(cap_, new_cap));
        for (const auto& [m, v] : c_)
            if (total_degree(m) <= r.cap_) r.c_[m] = v;
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        *this = *this + o;
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        *this = *this - o;
        return *this;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_compatible(a, b);
        TruncatedSeries r = a.truncated(std::min(a.cap_, b.cap_));
        for (const auto& [m, v] : b.c_)
            if (total_degree(m) <= r.cap_) r.add_to(m, v);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a + (b * Rational(-1));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c)
    {
        TruncatedSeries r(a.vars_, a.cap_);
        if (c == 0) return r;
        for (const auto& [m, v] : a.c_) r.c_[m] = v * c;
        return r;
    }
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return a * c; }

    /// Cauchy product truncated at min(caps).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_compatible(a, b);
        TruncatedSeries r(a.vars_, std::min(a.cap_, b.cap_));
        Mono m(a.nvars());
        for (const auto& [ma, va] : a.c_) {
            int da = total_degree(ma);
            if (da > r.cap_) continue;
            for (const auto& [mb, vb] : b.c_) {
                if (da + total_degree(mb) > r.cap_) continue;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_to(m, va * vb);
            }
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a.vars_ == b.vars_ && a.cap_ == b.cap_ && a.c_ == b.c_;
    }

    /// Multiply by the monomial z^e (e >= 0 componentwise), truncating.
    TruncatedSeries shifted(const Mono& e) const
    {
        TruncatedSeries r(vars_, cap_);
        Mono m(nvars());
        for (const auto& [ma, v] : c_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + e[i];
            r.set(m, v);
        }
        return r;
    }

    /// Logarithmic derivative theta_i = z_i d/dz_i.
    TruncatedSeries theta(std::size_t i) const
    {
        TruncatedSeries r(vars_, cap_);
        for (const auto& [m, v] : c_)
            if (m.at(i) != 0) r.c_[m] = v * m[i];
        return r;
    }

    /// Substitute variable i -> 0.
    TruncatedSeries at_zero(std::size_t i) const
    {
        TruncatedSeries r(vars_, cap_);
        for (const auto& [m, v] : c_)
            if (m.at(i) == 0) r.c_[m] = v;
        return r;
    }

    TruncatedSeries swapped(std::size_t i, std::size_t j) const
    {
        TruncatedSeries r(vars_, cap_);
        for (const auto& [m, v] : c_) {
            Mono k = m;
            std::swap(k.at(i), k.at(j));
            r.c_[k] = v;
        }
        return r;
    }

private:
    static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.vars_ != b.vars_) throw std::invalid_argument("variable-list mismatch");
    }

    std::vector<std::string> vars_;
    int cap_ = 0;
    std::map<Mono, Rational> c_;
};

/// Multiplicative inverse; requires a nonzero constant term. Solves
/// b_M = -(sum_{0<e<=M} a_e b_{M-e})/a_0 degree by degree.
inline TruncatedSeries reciprocal(const TruncatedSeries& a)
{
    Rational a0 = a.constant_term();
    if (a0 == 0) throw std::invalid_argument("reciprocal: zero constant term");
    TruncatedSeries b(a.vars(), a.cap());
    b.set(Mono(a.nvars(), 0), Rational(1) / a0);
    // bucket a's monomials by degree for the recursion
    std::vector<std::vector<std::pair<Mono, Rational>>> by_deg(a.cap() + 1);
    for (const auto& [m, v] : a.coefficients()) by_deg[total_degree(m)].push_back({m, v});

    // enumerate target monomials in degree order
    std::vector<Mono> targets;
    {
        Mono m(a.nvars(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
            if (i + 1 == a.nvars()) {
                m[i] = rem;
                targets.push_back(m);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                m[i] = e;
                rec(i + 1, rem - e);
            }
        };
        for (int d = 1; d <= a.cap(); ++d) rec(0, d);
        std::stable_sort(targets.begin(), targets.end(), [](const Mono& x, const Mono& y) {
            return total_degree(x) < total_degree(y);
        });
    }
    for (const auto& M : targets) {
        Rational acc = 0;
        int dM = total_degree(M);
        for (int d = 1; d <= dM; ++d) {
            for (const auto& [e, ae] : by_deg[d]) {
                Mono k(M.size());
                bool ok = true;
                for (std::size_t i = 0; i < M.size(); ++i) {
                    k[i] = M[i] - e[i];
                    if (k[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) acc += ae * b.coeff(k);
            }
        }
        if (acc != 0) b.set(M, -acc / a0);
    }
    return b;
}

inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a * reciprocal(b);
}

/// exp of a series with zero constant term.
inline TruncatedSeries exp_series(const TruncatedSeries& g)
{
    if (g.constant_term() != 0) throw std::invalid_argument("exp_series: nonzero constant term");
    TruncatedSeries out = TruncatedSeries::one(g.vars(), g.cap());
    TruncatedSeries term = out;
    for (int k = 1; k <= g.cap(); ++k) {
        term = term * g * (Rational(1) / k);
        out += term;
    }
    return out;
}

/// log of a series with constant term 1.
inline TruncatedSeries log_series(const TruncatedSeries& f)
{
    if (f.constant_term() != 1) throw std::invalid_argument("log_series: constant term must be 1");
    TruncatedSeries u = f - TruncatedSeries::one(f.vars(), f.cap());
    TruncatedSeries out(f.vars(), f.cap());
    TruncatedSeries term = TruncatedSeries::one(f.vars(), f.cap());
    for (int k = 1; k <= f.cap(); ++k) {
        term = term * u;
        out += term * (Rational(k % 2 ? 1 : -1) / k);
    }
    return out;
}

/// Compose f with args: variable i of f is replaced by args[i]. Every arg
/// must share one variable list and have zero constant term.
inline TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<TruncatedSeries>& args)
{
    if (args.size() != f.nvars()) throw std::invalid_argument("substitute: arity mismatch");
    for (const auto& g : args)
        if (g.constant_term() != 0)
            throw std::invalid_argument("substitute: argument with nonzero constant term");
    int cap = f.cap();
    for (const auto& g : args) cap = std::min(cap, g.cap());
    const auto& vars = args.front().vars();
    // memoized powers of each argument
    std::vector<std::vector<TruncatedSeries>> pw(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) pw[i].push_back(TruncatedSeries::one(vars, cap));
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
        while (static_cast<int>(pw[i].size()) <= e) pw[i].push_back(pw[i].back() * args[i]);
        return pw[i][e];
    };
    TruncatedSeries out(vars, cap);
    for (const auto& [m, v] : f.coefficients()) {
        TruncatedSeries t = TruncatedSeries::constant(vars, cap, v);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        out += t;
    }
    return out;
}

/// Hadamard product lifted to total degree: the coefficient of b at
/// multi-index (d_1..d_k) is scaled by the coefficient of the one-variable
/// series a at degree d_1+...+d_k.
inline TruncatedSeries hadamard_total(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.nvars() != 1) throw std::invalid_argument("hadamard_total: first factor must be univariate");
    TruncatedSeries r(b.vars(), std::min(a.cap(), b.cap()));
    for (const auto& [m, v] : b.coefficients()) {
        int d = total_degree(m);
        if (d > r.cap()) continue;
        Rational c = a.coeff(Mono{d});
        if (c != 0) r.set(m, v * c);
    }
    return r;
}

} // namespace mirrorkit
