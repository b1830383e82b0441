#pragma once

#include <mirrorkit/rational.hpp>

#include <optional>
#include <vector>

namespace mirrorkit {

/// Exact dense linear algebra for operator fitting and Frobenius solves.
/// The forward elimination is fraction-free (Bareiss) over Integer to keep
/// intermediate entries small; back substitution is rational.

struct Echelon {
    std::vector<std::vector<Integer>> rows; // echelon form, one pivot per row
    std::vector<int> pivot_col;             // pivot column of each row
    int ncols = 0;
};

namespace detail {

inline std::vector<std::vector<Integer>> clear_rows(const std::vector<std::vector<Rational>>& m)
{
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer lcm = 1;
        for (const auto& x : row)
            if (x != 0) lcm = lcm / gcd(lcm, den(x)) * den(x);
        std::vector<Integer> r(row.size());
        Integer content = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            r[j] = num(row[j]) * (lcm / den(row[j]));
            content = gcd(content, r[j]);
        }
        if (content > 1)
            for (auto& x : r) x /= content;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

/// Fraction-free row reduction. Zero rows are discarded.
inline Echelon bareiss_echelon(const std::vector<std::vector<Rational>>& matrix, int ncols)
{
    Echelon e;
    e.ncols = ncols;
    auto m = detail::clear_rows(matrix);
    Integer prev = 1;
    std::size_t r0 = 0;
    for (int c = 0; c < ncols && r0 < m.size(); ++c) {
        std::size_t p = r0;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r0], m[p]);
        const Integer piv = m[r0][c];
        for (std::size_t i = r0 + 1; i < m.size(); ++i) {
            for (int j = c + 1; j < ncols; ++j) m[i][j] = (m[i][j] * piv - m[i][c] * m[r0][j]) / prev;
            m[i][c] = 0;
        }
        prev = piv;
        e.pivot_col.push_back(c);
        ++r0;
    }
    m.resize(r0);
    e.rows = std::move(m);
    return e;
}

/// Basis of the right kernel of the given matrix.
inline std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& matrix,
                                                    int ncols)
{
    Echelon e = bareiss_echelon(matrix, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols, 0);
        v[f] = 1;
        for (int r = static_cast<int>(e.rows.size()) - 1; r >= 0; --r) {
            int pc = e.pivot_col[r];
            Rational acc = 0;
            for (int j = pc + 1; j < ncols; ++j)
                if (v[j] != 0) acc += Rational(e.rows[r][j]) * v[j];
            v[pc] = -acc / Rational(e.rows[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int rank_of(const std::vector<std::vector<Rational>>& matrix, int ncols)
{
    return static_cast<int>(bareiss_echelon(matrix, ncols).pivot_col.size());
}

struct LinearSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<Rational> solution; // valid when consistent; free vars set to 0
    int nfree = 0;
};

/// Solve A x = b exactly (A given as rows). Free variables are reported and
/// set to zero in the returned particular solution.
inline LinearSolve solve_linear(const std::vector<std::vector<Rational>>& a,
                                const std::vector<Rational>& b, int ncols)
{
    std::vector<std::vector<Rational>> aug(a);
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = bareiss_echelon(aug, ncols + 1);
    LinearSolve out;
    for (std::size_t r = 0; r < e.rows.size(); ++r)
        if (e.pivot_col[r] == ncols) return out; // 0 = nonzero
    out.consistent = true;
    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivot_col) is_pivot[c] = true;
    out.nfree = ncols - static_cast<int>(e.pivot_col.size());
    out.unique = out.nfree == 0;
    std::vector<Rational> v(ncols, 0);
    for (int r = static_cast<int>(e.rows.size()) - 1; r >= 0; --r) {
        int pc = e.pivot_col[r];
        Rational acc = Rational(e.rows[r][ncols]);
        for (int j = pc + 1; j < ncols; ++j)
            if (v[j] != 0) acc -= Rational(e.rows[r][j]) * v[j];
        v[pc] = acc / Rational(e.rows[r][pc]);
    }
    out.solution = std::move(v);
    return out;
}

/// Is v in the span of the given vectors?
inline bool in_span(const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& v)
{
    if (vectors.empty()) return false;
    int n = static_cast<int>(v.size());
    std::vector<std::vector<Rational>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].resize(vectors.size());
        for (std::size_t k = 0; k < vectors.size(); ++k) rows[i][k] = vectors[k][i];
    }
    return solve_linear(rows, v, static_cast<int>(vectors.size())).consistent;
}

} // namespace mirrorkit
