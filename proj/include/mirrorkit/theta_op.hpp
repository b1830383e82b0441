#pragma once

#include <mirrorkit/series.hpp>

#include <optional>
#include <sstream>

namespace mirrorkit {

/// Polynomial in the commuting symbols theta_i, used when expanding
/// compositions and coordinate changes.
using ThetaPoly = std::map<Mono, Rational>;

namespace detail {

inline ThetaPoly tp_mul(const ThetaPoly& a, const ThetaPoly& b)
{
    ThetaPoly out;
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

inline ThetaPoly tp_pow(const ThetaPoly& a, int n, std::size_t nvars)
{
    ThetaPoly out{{Mono(nvars, 0), Rational(1)}};
    for (int i = 0; i < n; ++i) out = tp_mul(out, a);
    return out;
}

} // namespace detail

/// Linear differential operator in the logarithmic derivations
/// theta_i = z_i d/dz_i, kept in normal order: each term is a coordinate
/// polynomial (on the left) times a theta-monomial (on the right). The
/// commutation rule theta_i z_j = z_j (theta_i + delta_ij) is applied during
/// composition. Coordinate exponents may go negative under a torus
/// coordinate change; clear_monomial_prefactor() restores polynomial form.
class ThetaOperator {
public:
    using CoordPoly = std::map<Mono, Rational>;

    ThetaOperator() = default;
    explicit ThetaOperator(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::map<Mono, CoordPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Mono& theta_exp, const Mono& coord_exp, const Rational& c)
    {
        if (theta_exp.size() != nvars() || coord_exp.size() != nvars())
            throw std::invalid_argument("theta operator arity mismatch");
        auto& poly = terms_[theta_exp];
        auto& v = poly[coord_exp];
        v += c;
        if (v == 0) poly.erase(coord_exp);
        if (poly.empty()) terms_.erase(theta_exp);
    }

    int theta_degree() const
    {
        int d = 0;
        for (const auto& [t, p] : terms_) d = std::max(d, total_degree(t));
        return d;
    }

    /// Largest total degree among coefficient monomials.
    int coord_degree_max() const
    {
        int d = 0;
        for (const auto& [t, p] : terms_)
            for (const auto& [e, c] : p) d = std::max(d, total_degree(e));
        return d;
    }

    bool has_negative_exponents() const
    {
        for (const auto& [t, p] : terms_)
            for (const auto& [e, c] : p)
                for (int x : e)
                    if (x < 0) return true;
        return false;
    }

    friend ThetaOperator operator+(const ThetaOperator& a, const ThetaOperator& b)
    {
        ThetaOperator r = a;
        for (const auto& [t, p] : b.terms_)
            for (const auto& [e, c] : p) r.add_term(t, e, c);
        return r;
    }
    friend ThetaOperator operator*(const Rational& s, const ThetaOperator& a)
    {
        ThetaOperator r(a.vars_);
        if (s == 0) return r;
        for (const auto& [t, p] : a.terms_)
            for (const auto& [e, c] : p) r.add_term(t, e, s * c);
        return r;
    }
    friend ThetaOperator operator-(const ThetaOperator& a, const ThetaOperator& b)
    {
        return a + Rational(-1) * b;
    }
    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Exact action on a truncated series. The result is truncated at
    /// cap - coord_degree_max() so a claim about the result never depends on
    /// unknown coefficients of s beyond its cap.
    TruncatedSeries apply(const TruncatedSeries& s) const
    {
        if (s.vars() != vars_) throw std::invalid_argument("apply: variable mismatch");
        if (has_negative_exponents()) throw std::invalid_argument("apply: operator has Laurent coefficients");
        TruncatedSeries out(vars_, std::max(0, s.cap() - coord_degree_max()));
        Mono k(nvars());
        for (const auto& [t, poly] : terms_) {
            for (const auto& [m, v] : s.coefficients()) {
                Rational eig = v;
                for (std::size_t i = 0; i < k.size(); ++i)
                    for (int j = 0; j < t[i]; ++j) eig *= m[i];
                if (eig == 0) continue;
                for (const auto& [e, c] : poly) {
                    for (std::size_t i = 0; i < k.size(); ++i) k[i] = m[i] + e[i];
                    out.add_to(k, c * eig);
                }
            }
        }
        return out;
    }

    /// Single output coefficient of the action, exact for |M| <= s.cap().
    Rational action_coefficient(const TruncatedSeries& s, const Mono& M) const
    {
        Rational acc = 0;
        Mono m(nvars());
        for (const auto& [t, poly] : terms_)
            for (const auto& [e, c] : poly) {
                bool ok = true;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = M[i] - e[i];
                    if (m[i] < 0) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                Rational v = s.coeff(m);
                if (v == 0) continue;
                for (std::size_t i = 0; i < m.size(); ++i)
                    for (int j = 0; j < t[i]; ++j) v *= m[i];
                acc += c * v;
            }
        return acc;
    }

    /// Formal derivative with respect to the symbol theta_i (used for
    /// logarithmic Frobenius solutions).
    ThetaOperator dtheta(std::size_t i) const
    {
        ThetaOperator r(vars_);
        for (const auto& [t, p] : terms_) {
            if (t[i] == 0) continue;
            Mono t2 = t;
            --t2[i];
            for (const auto& [e, c] : p) r.add_term(t2, e, c * t[i]);
        }
        return r;
    }

    /// Composition a . b in normal form:
    /// theta^a (z^e theta^b) = z^e (theta+e)^a theta^b.
    friend ThetaOperator compose(const ThetaOperator& a, const ThetaOperator& b)
    {
        if (a.vars_ != b.vars_) throw std::invalid_argument("compose: variable mismatch");
        ThetaOperator r(a.vars_);
        const std::size_t n = a.nvars();
        for (const auto& [ta, pa] : a.terms_)
            for (const auto& [ea, ca] : pa)
                for (const auto& [tb, pb] : b.terms_)
                    for (const auto& [eb, cb] : pb) {
                        // shifted theta-polynomial (theta + eb)^{ta}
                        ThetaPoly shifted{{Mono(n, 0), ca * cb}};
                        for (std::size_t i = 0; i < n; ++i) {
                            if (ta[i] == 0) continue;
                            ThetaPoly lin;
                            Mono unit(n, 0);
                            unit[i] = 1;
                            lin[unit] = 1;
                            if (eb[i] != 0) lin[Mono(n, 0)] = eb[i];
                            shifted = detail::tp_mul(shifted, detail::tp_pow(lin, ta[i], n));
                        }
                        Mono e(n);
                        for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                        for (const auto& [tg, cg] : shifted) {
                            Mono t(n);
                            for (std::size_t i = 0; i < n; ++i) t[i] = tg[i] + tb[i];
                            r.add_term(t, e, cg);
                        }
                    }
        return r;
    }

    /// m . op . m^{-1} for a scaled monomial m = s z^expo. The scale cancels;
    /// the theta symbols shift by -expo in every coefficient polynomial.
    ThetaOperator conjugate_by_monomial(const Mono& expo) const
    {
        ThetaOperator r(vars_);
        const std::size_t n = nvars();
        for (const auto& [t, p] : terms_) {
            ThetaPoly sh{{Mono(n, 0), Rational(1)}};
            for (std::size_t i = 0; i < n; ++i) {
                if (t[i] == 0) continue;
                ThetaPoly lin;
                Mono unit(n, 0);
                unit[i] = 1;
                lin[unit] = 1;
                if (expo[i] != 0) lin[Mono(n, 0)] = -expo[i];
                sh = detail::tp_mul(sh, detail::tp_pow(lin, t[i], n));
            }
            for (const auto& [tg, cg] : sh)
                for (const auto& [e, c] : p) r.add_term(tg, e, c * cg);
        }
        return r;
    }

    /// Rewrite in torus coordinates w with z_j = sign_j prod_i w_i^{A(i,j)}.
    /// A is indexed A[new][old] and must be unimodular; the theta symbols
    /// transform by the inverse matrix, coordinate monomials by A itself.
    ThetaOperator change_torus_coordinates(const std::vector<std::vector<int>>& A,
                                           const std::vector<int>& signs,
                                           std::vector<std::string> new_vars) const
    {
        const std::size_t n = nvars();
        if (A.size() != n || signs.size() != n || new_vars.size() != n)
            throw std::invalid_argument("coordinate change arity mismatch");
        auto inv = integer_inverse(A); // throws if not unimodular
        ThetaOperator r(std::move(new_vars));
        for (const auto& [t, p] : terms_) {
            // theta_{z_j} = sum_i inv[j][i] theta_{w_i}
            ThetaPoly tp{{Mono(n, 0), Rational(1)}};
            for (std::size_t j = 0; j < n; ++j) {
                if (t[j] == 0) continue;
                ThetaPoly lin;
                for (std::size_t i = 0; i < n; ++i) {
                    if (inv[j][i] == 0) continue;
                    Mono unit(n, 0);
                    unit[i] = 1;
                    lin[unit] = inv[j][i];
                }
                tp = detail::tp_mul(tp, detail::tp_pow(lin, t[j], n));
            }
            for (const auto& [e, c] : p) {
                Mono w(n, 0);
                int sgn = 1;
                for (std::size_t j = 0; j < n; ++j) {
                    for (std::size_t i = 0; i < n; ++i) w[i] += A[i][j] * e[j];
                    if (signs[j] < 0 && (e[j] % 2 != 0)) sgn = -sgn;
                }
                for (const auto& [tg, cg] : tp) r.add_term(tg, w, c * cg * sgn);
            }
        }
        return r;
    }

    /// Left-multiply by the smallest monomial making all coefficient
    /// exponents non-negative. Returns the shift that was applied.
    Mono clear_monomial_prefactor()
    {
        Mono mn(nvars(), 0);
        for (const auto& [t, p] : terms_)
            for (const auto& [e, c] : p)
                for (std::size_t i = 0; i < mn.size(); ++i) mn[i] = std::min(mn[i], e[i]);
        bool trivial = true;
        for (int x : mn) trivial = trivial && x == 0;
        if (trivial) return Mono(nvars(), 0);
        std::map<Mono, CoordPoly> shifted;
        for (auto& [t, p] : terms_) {
            CoordPoly q;
            for (auto& [e, c] : p) {
                Mono e2 = e;
                for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= mn[i];
                q[e2] = c;
            }
            shifted[t] = std::move(q);
        }
        terms_ = std::move(shifted);
        for (auto& x : mn) x = -x;
        return mn; // exponent of the monomial we multiplied by
    }

    /// Scale so all coefficients are coprime integers and the
    /// lexicographically-first nonzero coefficient (theta-exponent first,
    /// then coordinate monomial) is positive.
    ThetaOperator normalized() const
    {
        if (terms_.empty()) return *this;
        Integer lcm = 1, content = 0;
        for (const auto& [t, p] : terms_)
            for (const auto& [e, c] : p) lcm = lcm / gcd(lcm, den(c)) * den(c);
        for (const auto& [t, p] : terms_)
            for (const auto& [e, c] : p) content = gcd(content, num(c) * (lcm / den(c)));
        Rational scale(lcm, content);
        const auto& first = terms_.begin()->second.begin()->second;
        if (first * scale < 0) scale = -scale;
        return scale * *this;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        for (const auto& [t, p] : terms_) {
            for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
            os << " : ";
            bool firstTerm = true;
            for (const auto& [e, c] : p) {
                if (!firstTerm) os << " + ";
                firstTerm = false;
                os << mirrorkit::to_string(c);
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0) os << " * " << vars_[i] << "^" << e[i];
            }
            os << '\n';
        }
        return os.str();
    }

    static ThetaOperator from_string(const std::string& text, std::vector<std::string> vars)
    {
        ThetaOperator op(vars);
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            Mono t(vars.size());
            for (auto& e : t)
                if (!(ls >> e)) throw std::invalid_argument("operator: bad theta exponents");
            std::string colon;
            ls >> colon;
            if (colon != ":") throw std::invalid_argument("operator: missing ':'");
            std::string rest;
            std::getline(ls, rest);
            for (auto& part : split(rest, '+')) {
                std::istringstream ps(part);
                std::string coef;
                ps >> coef;
                Rational c = rational_from_string(coef);
                Mono e(vars.size(), 0);
                std::string star;
                while (ps >> star) {
                    if (star != "*") throw std::invalid_argument("operator: expected '*'");
                    std::string fac;
                    ps >> fac;
                    auto caret = fac.find('^');
                    std::string name = fac.substr(0, caret);
                    int ex = caret == std::string::npos ? 1 : std::stoi(fac.substr(caret + 1));
                    auto it = std::find(vars.begin(), vars.end(), name);
                    if (it == vars.end()) throw std::invalid_argument("operator: unknown variable " + name);
                    e[it - vars.begin()] += ex;
                }
                op.add_term(t, e, c);
            }
        }
        return op;
    }

private:
    static std::vector<std::string> split(const std::string& s, char sep)
    {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == sep) {
                out.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    }

    static std::vector<std::vector<Rational>> integer_inverse(const std::vector<std::vector<int>>& A)
    {
        const std::size_t n = A.size();
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
            m[i][n + i] = 1;
        }
        Rational det = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && m[p][c] == 0) ++p;
            if (p == n) throw std::invalid_argument("coordinate change: singular matrix");
            std::swap(m[c], m[p]);
            if (p != c) det = -det;
            det *= m[c][c];
            Rational inv = Rational(1) / m[c][c];
            for (auto& x : m[c]) x *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || m[r][c] == 0) continue;
                Rational f = m[r][c];
                for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
            }
        }
        if (det != 1 && det != -1) throw std::invalid_argument("coordinate change: matrix not unimodular");
        std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                inv[i][j] = m[i][n + j];
                if (!is_integer(inv[i][j])) throw std::invalid_argument("coordinate change: non-integer inverse");
            }
        return inv;
    }

    std::vector<std::string> vars_;
    std::map<Mono, CoordPoly> terms_;
};

struct AnnihilationResult {
    bool annihilates = true;
    std::optional<Mono> first_failure;
    Rational failing_value = 0;
    int verified_degree = -1;
};

/// Check op(s) = 0 for every coefficient of total degree <= through_degree.
/// Because coefficient exponents are non-negative, the action coefficient at
/// total degree <= s.cap() only reads stored coefficients of s, so
/// through_degree up to s.cap() is exact.
inline AnnihilationResult annihilates(const ThetaOperator& op, const TruncatedSeries& s,
                                      int through_degree)
{
    if (through_degree > s.cap())
        throw std::invalid_argument("annihilates: requested degree beyond series cap");
    AnnihilationResult res;
    res.verified_degree = through_degree;
    std::function<bool(Mono&, std::size_t, int)> rec = [&](Mono& m, std::size_t i, int rem) {
        if (i + 1 == m.size()) {
            m[i] = rem;
            Rational v = op.action_coefficient(s, m);
            if (v != 0) {
                res.annihilates = false;
                res.first_failure = m;
                res.failing_value = v;
                return false;
            }
            return true;
        }
        for (int e = 0; e <= rem; ++e) {
            m[i] = e;
            if (!rec(m, i + 1, rem - e)) return false;
        }
        return true;
    };
    Mono m(op.nvars());
    for (int d = 0; d <= through_degree && res.annihilates; ++d) rec(m, 0, d);
    return res;
}

} // namespace mirrorkit
