#pragma once

#include <mirrorkit/rational.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mirrorkit {

class GradedRing;

/// Element of a GradedRing, sparse in the basis.
class RingClass {
public:
    RingClass() = default;
    explicit RingClass(const GradedRing* ring) : ring_(ring) {}

    const GradedRing* ring() const { return ring_; }
    const std::map<int, Rational>& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational coord(int i) const
    {
        auto it = c_.find(i);
        return it == c_.end() ? Rational(0) : it->second;
    }
    void add(int i, const Rational& v)
    {
        auto& x = c_[i];
        x += v;
        if (x == 0) c_.erase(i);
    }

    RingClass& operator+=(const RingClass& o)
    {
        for (const auto& [i, v] : o.c_) add(i, v);
        return *this;
    }
    friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
    friend RingClass operator*(const Rational& s, const RingClass& a)
    {
        RingClass r(a.ring_);
        if (s == 0) return r;
        for (const auto& [i, v] : a.c_) r.c_[i] = s * v;
        return r;
    }
    friend RingClass operator-(const RingClass& a, const RingClass& b)
    {
        return a + Rational(-1) * b;
    }
    friend bool operator==(const RingClass& a, const RingClass& b) { return a.c_ == b.c_; }

private:
    const GradedRing* ring_ = nullptr;
    std::map<int, Rational> c_;
};

/// Finite-dimensional graded commutative ring with an integration functional
/// normalized by integrate(top class) = 1. Degrees are stored as real
/// degrees, so divisor classes have degree 2. The multiplication table is
/// precomputed and sparse.
class GradedRing {
public:
    GradedRing() = default;

    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees; // real degrees (all even here)
    int complex_dim = 0;
    int top = -1;

    int rank() const { return static_cast<int>(labels.size()); }

    void init_table()
    {
        table_.assign(static_cast<std::size_t>(rank()) * rank(), {});
    }
    void set_product(int i, int j, std::vector<std::pair<int, Rational>> v)
    {
        table_[static_cast<std::size_t>(i) * rank() + j] = std::move(v);
    }
    const std::vector<std::pair<int, Rational>>& product(int i, int j) const
    {
        return table_[static_cast<std::size_t>(i) * rank() + j];
    }

    RingClass zero() const { return RingClass(this); }
    RingClass basis(int i) const
    {
        RingClass r(this);
        r.add(i, 1);
        return r;
    }
    RingClass one() const { return basis(0); }

    RingClass mul(const RingClass& a, const RingClass& b) const
    {
        RingClass r(this);
        for (const auto& [i, va] : a.coords())
            for (const auto& [j, vb] : b.coords()) {
                Rational s = va * vb;
                for (const auto& [k, c] : product(i, j)) r.add(k, s * c);
            }
        return r;
    }

    Rational integrate(const RingClass& a) const { return a.coord(top); }

private:
    std::vector<std::vector<std::pair<int, Rational>>> table_;
};

inline RingClass operator*(const RingClass& a, const RingClass& b)
{
    if (a.ring() == nullptr || a.ring() != b.ring())
        throw std::invalid_argument("ring class product: mismatched rings");
    return a.ring()->mul(a, b);
}

/// Q[h]/(h^{n+1}) with integrate(h^n) = 1.
inline GradedRing ring_projective_space(int n)
{
    if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
    GradedRing g;
    g.name = "P" + std::to_string(n);
    for (int k = 0; k <= n; ++k) {
        g.labels.push_back(k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k)));
        g.degrees.push_back(2 * k);
    }
    g.complex_dim = n;
    g.top = n;
    g.init_table();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i + j <= n) g.set_product(i, j, {{i + j, 1}});
    return g;
}

namespace detail {

/// Partitions (a,b) with box_a >= a >= b >= 0, ordered by degree then lex.
inline std::vector<std::pair<int, int>> g25_partitions()
{
    std::vector<std::pair<int, int>> p;
    for (int d = 0; d <= 6; ++d)
        for (int a = 0; a <= 3; ++a) {
            int b = d - a;
            if (b >= 0 && b <= a) p.push_back({a, b});
        }
    return p;
}

} // namespace detail

/// Schubert-basis cohomology of G(2,5). Products of sigma_1 and sigma_{1,1}
/// with anything follow the Pieri rule; general products are assembled by
/// iterated Pieri through the two-row Giambelli recursion
/// sigma_{m,0} = sigma_1 sigma_{m-1,0} - sigma_{1,1} sigma_{m-2,0}.
inline GradedRing ring_grassmannian_2_5()
{
    const auto parts = detail::g25_partitions();
    const int n = static_cast<int>(parts.size());
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < n; ++i) idx[parts[i]] = i;

    using Vec = std::vector<Rational>;
    auto pieri1 = [&](const Vec& v) {
        Vec r(n, 0);
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            auto [a, b] = parts[i];
            if (a + 1 <= 3) r[idx.at({a + 1, b})] += v[i];
            if (b + 1 <= a) r[idx.at({a, b + 1})] += v[i];
        }
        return r;
    };
    auto pieri11 = [&](const Vec& v) {
        Vec r(n, 0);
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            auto [a, b] = parts[i];
            if (a + 1 <= 3 && b + 1 <= a + 1) r[idx.at({a + 1, b + 1})] += v[i];
        }
        return r;
    };
    // multiply v by sigma_{c,d} via iterated Pieri
    std::function<Vec(int, const Vec&)> rowop = [&](int m, const Vec& v) -> Vec {
        if (m == 0) return v;
        if (m == 1) return pieri1(v);
        Vec a = pieri1(rowop(m - 1, v));
        Vec b = pieri11(rowop(m - 2, v));
        for (int i = 0; i < n; ++i) a[i] -= b[i];
        return a;
    };
    auto mult_by = [&](std::pair<int, int> part, const Vec& v) {
        Vec r = v;
        for (int k = 0; k < part.second; ++k) r = pieri11(r);
        return rowop(part.first - part.second, r);
    };

    GradedRing g;
    g.name = "G(2,5)";
    for (auto [a, b] : parts) {
        g.labels.push_back("s" + std::to_string(a) + std::to_string(b));
        g.degrees.push_back(2 * (a + b));
    }
    g.complex_dim = 6;
    g.top = idx.at({3, 3});
    g.init_table();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            Vec p = mult_by(parts[j], e);
            std::vector<std::pair<int, Rational>> sparse;
            for (int k = 0; k < n; ++k)
                if (p[k] != 0) sparse.push_back({k, p[k]});
            g.set_product(i, j, std::move(sparse));
        }
    }
    return g;
}

/// Tensor product with Kunneth index (ia, ib) -> ia*rank_b + ib.
struct ProductRing {
    GradedRing ring;
    int rank_a = 0, rank_b = 0;
    int index(int ia, int ib) const { return ia * rank_b + ib; }
};

inline ProductRing ring_product(const GradedRing& a, const GradedRing& b)
{
    ProductRing p;
    p.rank_a = a.rank();
    p.rank_b = b.rank();
    GradedRing& g = p.ring;
    g.name = a.name + "*" + b.name;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < b.rank(); ++j) {
            g.labels.push_back(a.labels[i] + "." + b.labels[j]);
            g.degrees.push_back(a.degrees[i] + b.degrees[j]);
        }
    g.complex_dim = a.complex_dim + b.complex_dim;
    g.top = p.index(a.top, b.top);
    g.init_table();
    for (int i1 = 0; i1 < a.rank(); ++i1)
        for (int j1 = 0; j1 < b.rank(); ++j1)
            for (int i2 = 0; i2 < a.rank(); ++i2)
                for (int j2 = 0; j2 < b.rank(); ++j2) {
                    std::vector<std::pair<int, Rational>> sparse;
                    for (const auto& [ka, ca] : a.product(i1, i2))
                        for (const auto& [kb, cb] : b.product(j1, j2))
                            sparse.push_back({p.index(ka, kb), ca * cb});
                    g.set_product(p.index(i1, j1), p.index(i2, j2), std::move(sparse));
                }
    return p;
}

/// Projectivization P(E) of a rank-r bundle over the base ring, presented by
/// the Grothendieck relation xi^r + c1 xi^{r-1} + ... + cr = 0 for the given
/// Chern classes; integrate(xi^{r-1} * top_base) = 1.
struct BundleRing {
    GradedRing ring;
    int rank_base = 0, r = 0;
    int index(int xi_pow, int ibase) const { return xi_pow * rank_base + ibase; }
    RingClass xi() const { return ring.basis(index(1, 0)); }
    RingClass lift(const RingClass& base_class) const
    {
        RingClass out(&ring);
        for (const auto& [i, v] : base_class.coords()) out.add(index(0, i), v);
        return out;
    }
};

inline BundleRing ring_projective_bundle(const GradedRing& base, const std::vector<RingClass>& chern,
                                         int r)
{
    if (r < 1) throw std::invalid_argument("bundle rank must be >= 1");
    if (static_cast<int>(chern.size()) > r)
        throw std::invalid_argument("more Chern classes than the bundle rank");
    for (const auto& c : chern)
        if (!c.is_zero() && c.ring() != &base)
            throw std::invalid_argument("Chern class not in the base ring");
    BundleRing b;
    b.rank_base = base.rank();
    b.r = r;
    GradedRing& g = b.ring;
    g.name = "P(E)/" + base.name;
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < base.rank(); ++i) {
            std::string xi = k == 0 ? "" : (k == 1 ? "xi." : "xi^" + std::to_string(k) + ".");
            g.labels.push_back(xi + base.labels[i]);
            g.degrees.push_back(2 * k + base.degrees[i]);
        }
    g.complex_dim = base.complex_dim + r - 1;
    g.top = b.index(r - 1, base.top);

    // xi^p for p <= 2(r-1) as sum_k (base class) xi^k with k < r
    using Red = std::vector<RingClass>; // indexed by xi power, base-ring classes
    std::vector<Red> red(2 * r - 1, Red(r, RingClass(&base)));
    for (int p = 0; p < r; ++p) red[p][p] = base.one();
    for (int p = r; p <= 2 * (r - 1); ++p) {
        Red cur(r, RingClass(&base));
        for (std::size_t j = 1; j <= chern.size(); ++j) {
            if (chern[j - 1].is_zero()) continue;
            const Red& lower = red[p - j];
            for (int k = 0; k < r; ++k)
                cur[k] += Rational(-1) * (chern[j - 1] * lower[k]);
        }
        red[p] = std::move(cur);
    }

    g.init_table();
    for (int k1 = 0; k1 < r; ++k1)
        for (int i1 = 0; i1 < base.rank(); ++i1)
            for (int k2 = 0; k2 < r; ++k2)
                for (int i2 = 0; i2 < base.rank(); ++i2) {
                    std::vector<std::pair<int, Rational>> sparse;
                    for (const auto& [ib, cb] : base.product(i1, i2)) {
                        for (int k = 0; k < r; ++k) {
                            const RingClass& coef = red[k1 + k2][k];
                            if (coef.is_zero()) continue;
                            for (const auto& [jb, vb] : coef.coords())
                                for (const auto& [kb, ck] : base.product(ib, jb))
                                    sparse.push_back({b.index(k, kb), cb * vb * ck});
                        }
                    }
                    // merge duplicates
                    std::map<int, Rational> acc;
                    for (auto& [k, v] : sparse) {
                        acc[k] += v;
                        if (acc[k] == 0) acc.erase(k);
                    }
                    sparse.assign(acc.begin(), acc.end());
                    g.set_product(b.index(k1, i1), b.index(k2, i2), std::move(sparse));
                }
    return b;
}

/// Integral over the ring of a product of classes; zero unless the degrees
/// add up to the top degree.
inline Rational intersection_number(const GradedRing& ring, const std::vector<RingClass>& word)
{
    RingClass acc = ring.one();
    for (const auto& w : word) acc = ring.mul(acc, w);
    return ring.integrate(acc);
}

} // namespace mirrorkit
