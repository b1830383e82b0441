#pragma once

#include <mirrorkit/givental.hpp>

namespace mirrorkit {

/// Full A-model run: normalized J-function, mirror map, genus-0 invariants
/// and BPS numbers.
struct AModelResult {
    MirrorTransformed mt;
    GWTable gw;
    BPSTable bps;
};

/// A-model pipeline for X1. The Grassmannian J-function convention is
/// asserted against the Gamma_1(5) period on entry.
inline AModelResult amodel_x1(const AmbientX1& amb, int cap)
{
    assert_gamma1_5_convention(amb.g25, std::min(cap, 4));
    auto I = i_function_x1(amb, cap);
    auto divcomp = [&](const RingClass& c) {
        auto a = amb.divisor_components(c);
        return std::vector<Rational>{a[0], a[1]};
    };
    AModelResult res;
    res.mt = mirror_transform(I, divcomp);
    auto kappa = amb.kappa();
    res.gw = gw_from_j(
        res.mt.J, [&](const RingClass& c, int a) { return amb.pair_divisor(c, a); },
        [&](const RingClass& c, int a, int b) { return amb.integrate_x1(c * amb.h[a] * amb.h[b]); },
        divcomp, [&](int a, int b, int c) { return kappa(a, b, c); });
    res.bps = bps_from_gw(res.gw);
    return res;
}

/// A-model pipeline for X0 (one Kahler parameter).
inline AModelResult amodel_x0(const AmbientX0& amb, int cap)
{
    assert_gamma1_5_convention(amb.g25, std::min(cap, 4));
    auto I = i_function_x0(amb, cap);
    auto divcomp = [&](const RingClass& c) {
        return std::vector<Rational>{amb.divisor_component(c)};
    };
    Rational kappa = amb.kappa();
    AModelResult res;
    res.mt = mirror_transform(I, divcomp);
    res.gw = gw_from_j(
        res.mt.J, [&](const RingClass& c, int) { return amb.pair_divisor(c); },
        [&](const RingClass& c, int, int) { return amb.integrate_x0(c * amb.L * amb.L); }, divcomp,
        [&](int, int, int) { return kappa; });
    res.bps = bps_from_gw(res.gw);
    return res;
}

} // namespace mirrorkit
