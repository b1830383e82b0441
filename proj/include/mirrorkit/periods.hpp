#pragma once

#include <mirrorkit/series.hpp>

namespace mirrorkit {

/// A_d = sum_k C(d,k)^2 C(d+k,k): coefficients of the holomorphic period of
/// the modular elliptic surface for Gamma_1(5).
inline Integer apery_gamma1_5(long d)
{
    if (d < 0) throw std::invalid_argument("apery: negative index");
    Integer a = 0;
    for (long k = 0; k <= d; ++k) {
        Integer b = binomial(d, k);
        a += b * b * binomial(d + k, k);
    }
    return a;
}

inline TruncatedSeries apery_series(int cap, const std::string& var = "x")
{
    TruncatedSeries s({var}, cap);
    for (int d = 0; d <= cap; ++d) s.set(Mono{d}, Rational(apery_gamma1_5(d)));
    return s;
}

/// Holomorphic period of the one-parameter family mirror to X0: sum A_d^2 x^d.
inline TruncatedSeries period_x0(int cap)
{
    TruncatedSeries s({"x"}, cap);
    for (int d = 0; d <= cap; ++d) {
        Integer a = apery_gamma1_5(d);
        s.set(Mono{d}, Rational(a * a));
    }
    return s;
}

/// (d1+d2)!^3 / (d1!^3 d2!^3) as a two-variable series (the period of the
/// second elliptic-curve family entering the fiber product).
inline TruncatedSeries multinomial_cubed_series(int cap, const std::vector<std::string>& vars = {"z1", "z2"})
{
    TruncatedSeries s(vars, cap);
    for (int d1 = 0; d1 <= cap; ++d1)
        for (int d2 = 0; d1 + d2 <= cap; ++d2) {
            Integer t = factorial(d1 + d2);
            Integer b = factorial(d1) * factorial(d2);
            s.set(Mono{d1, d2}, Rational(t * t * t, b * b * b));
        }
    return s;
}

/// Holomorphic period omega_0(z1,z2) at the large complex structure point
/// [1,0,0]: the total-degree Hadamard product of the Gamma_1(5) period with
/// the multinomial-cube series.
inline TruncatedSeries period_x1(int cap, const std::vector<std::string>& vars = {"z1", "z2"})
{
    return hadamard_total(apery_series(cap), multinomial_cubed_series(cap, vars));
}

/// Holomorphic period at the point [0,1,0], in the chart coordinates
/// (w0, w2): sum A_{d0} (d0+d2)!^3/(d0!^3 d2!^3) w0^{d0} w2^{d2}.
/// Unlike period_x1 this is a Hadamard product in the first variable only,
/// and is not symmetric.
inline TruncatedSeries period_x1_lcs010(int cap, const std::vector<std::string>& vars = {"w0", "w2"})
{
    TruncatedSeries s = multinomial_cubed_series(cap, vars);
    TruncatedSeries r(vars, cap);
    for (const auto& [m, v] : s.coefficients())
        r.set(m, v * Rational(apery_gamma1_5(m[0])));
    return r;
}

} // namespace mirrorkit
