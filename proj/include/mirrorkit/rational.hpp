#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorkit {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with positive
/// denominator (both maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Parse "n" or "n/d". Throws on malformed input or zero denominator.
inline Rational rational_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational '" + s + "': " + e.what());
    }
}

inline std::string to_string(const Rational& r)
{
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

/// Binomial coefficient by the Pascal recurrence, memoized row by row.
inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n || n < 0) return 0;
    static std::vector<std::vector<Integer>> rows{{1}};
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(prev.size() + 1, 1);
        for (std::size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

inline Integer factorial(long n)
{
    static std::vector<Integer> memo{1};
    while (static_cast<long>(memo.size()) <= n)
        memo.push_back(memo.back() * static_cast<long>(memo.size()));
    return memo[n];
}

inline Integer gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace mirrorkit
