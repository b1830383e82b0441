#pragma once

#include <mirrorkit/periods.hpp>
#include <mirrorkit/theta_op.hpp>

#include <array>
#include <functional>

namespace mirrorkit {

/// The two Picard-Fuchs operators annihilating the holomorphic period
/// omega_0(z1,z2) of the two-parameter family at the chart around [1,0,0].
inline ThetaOperator picard_fuchs_p1()
{
    ThetaOperator op({"z1", "z2"});
    auto put = [&](int t1, int t2, std::initializer_list<std::tuple<int, int, int>> poly) {
        for (auto [a, b, c] : poly) op.add_term({t1, t2}, {a, b}, c);
    };
    put(2, 0, {{2, 0, 1}, {1, 1, 11}, {0, 2, 10}, {1, 0, 11}, {0, 1, 11}, {0, 0, -1}});
    put(1, 1, {{2, 0, 5}, {1, 1, 10}, {0, 2, 5}, {1, 0, 22}, {0, 1, 22}, {0, 0, 1}});
    put(0, 2, {{2, 0, 10}, {1, 1, 11}, {0, 2, 1}, {1, 0, 11}, {0, 1, 11}, {0, 0, -1}});
    // (z1+z2)(2 z1 + 5 z2 + 11)
    put(1, 0, {{2, 0, 2}, {1, 1, 7}, {0, 2, 5}, {1, 0, 11}, {0, 1, 11}});
    // (z1+z2)(5 z1 + 2 z2 + 11)
    put(0, 1, {{2, 0, 5}, {1, 1, 7}, {0, 2, 2}, {1, 0, 11}, {0, 1, 11}});
    // (z1+z2)(z1+z2+3)
    put(0, 0, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}, {1, 0, 3}, {0, 1, 3}});
    return op;
}

inline ThetaOperator picard_fuchs_p2()
{
    ThetaOperator op({"z1", "z2"});
    op.add_term({0, 3}, {1, 0}, 1);
    op.add_term({3, 0}, {0, 1}, -1);
    return op;
}

/// Picard-Fuchs operator of the Gamma_1(5) elliptic period sum A_d x^d:
/// theta^2 - x(11 theta^2 + 11 theta + 3) - x^2 (theta+1)^2.
inline ThetaOperator gamma1_5_operator()
{
    ThetaOperator op({"x"});
    op.add_term({2}, {0}, 1);
    op.add_term({2}, {1}, -11);
    op.add_term({1}, {1}, -11);
    op.add_term({0}, {1}, -3);
    op.add_term({2}, {2}, -1);
    op.add_term({1}, {2}, -2);
    op.add_term({0}, {2}, -1);
    return op;
}

/// One large-complex-structure chart of the compactified two-parameter
/// moduli plane. Local coordinates are signed monomials in the affine
/// coordinates (z1,z2) of the chart at [1,0,0]; the gauge exponent is the
/// monomial conjugation that renormalizes the period to the chart's
/// holomorphic one.
struct LcsChart {
    std::string name;                     // "100", "010", "001"
    std::array<int, 3> point;             // homogeneous point
    std::vector<std::string> vars;        // local coordinate names
    std::vector<std::vector<int>> matrix; // A[new][old]: local = signed monomials in (z1,z2)
    std::vector<int> signs;               // sign of each old coordinate's monomial expression
    Mono gauge;                           // conjugation monomial exponent (period gauge)
    std::function<TruncatedSeries(int)> holomorphic_period;
};

inline LcsChart chart_100()
{
    return {"100",
            {1, 0, 0},
            {"z1", "z2"},
            {{1, 0}, {0, 1}},
            {1, 1},
            {0, 0},
            [](int cap) { return period_x1(cap); }};
}

/// Chart at [0,1,0]: w0 = -1/z1, w2 = -z2/z1, i.e. z1 = -w0^{-1},
/// z2 = w0^{-1} w2.
inline LcsChart chart_010()
{
    return {"010",
            {0, 1, 0},
            {"w0", "w2"},
            {{-1, -1}, {0, 1}},
            {-1, 1},
            {-1, 0},
            [](int cap) { return period_x1_lcs010(cap, {"w0", "w2"}); }};
}

/// Chart at [0,0,1]: v0 = -1/z2, v2 = -z1/z2 (mirror image of chart 010
/// under the z1 <-> z2 symmetry of the family).
inline LcsChart chart_001()
{
    return {"001",
            {0, 0, 1},
            {"v0", "v2"},
            {{-1, -1}, {1, 0}},
            {1, -1},
            {-1, 0},
            [](int cap) { return period_x1_lcs010(cap, {"v0", "v2"}); }};
}

inline LcsChart chart_by_name(const std::string& name)
{
    if (name == "100") return chart_100();
    if (name == "010") return chart_010();
    if (name == "001") return chart_001();
    throw std::invalid_argument("unknown chart " + name);
}

/// The Picard-Fuchs system written in a chart's local coordinates and
/// gauge-conjugated so that it annihilates the chart's holomorphic period:
/// for chart 010 this produces Q1 ~ w0 P1 w0^{-1}-type gauge transforms of
/// the transported operators, for 100 it returns {P1, P2} unchanged.
inline std::vector<ThetaOperator> chart_operators(const LcsChart& chart)
{
    std::vector<ThetaOperator> out;
    for (const auto& p : {picard_fuchs_p1(), picard_fuchs_p2()}) {
        if (chart.name == "100") {
            out.push_back(p);
            continue;
        }
        ThetaOperator q = p.change_torus_coordinates(chart.matrix, chart.signs, chart.vars);
        q.clear_monomial_prefactor();
        out.push_back(q.conjugate_by_monomial(chart.gauge).normalized());
    }
    return out;
}

} // namespace mirrorkit
