#pragma once

#include <mirrorkit/rational.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace mirrorkit {

/// Kodaira fiber of an elliptic surface: type I_b (a cycle of b rational
/// curves, Euler number b; I_0 is a smooth fiber) or type II (a cusp).
struct KodairaFiber {
    enum class Kind { In, II };
    Kind kind = Kind::In;
    int b = 0; // only for I_b

    static KodairaFiber In(int b)
    {
        if (b < 0) throw std::invalid_argument("I_b needs b >= 0");
        return {Kind::In, b};
    }
    static KodairaFiber II() { return {Kind::II, 0}; }

    int components() const { return kind == Kind::II ? 1 : std::max(b, 1); }
    int euler() const { return kind == Kind::II ? 2 : b; }
    std::string name() const { return kind == Kind::II ? "II" : "I" + std::to_string(b); }
};

/// Relatively minimal rational elliptic surface with section, recorded by
/// its singular fibers at marked points of the base.
struct SurfaceSpec {
    std::string name;
    std::vector<std::pair<std::string, KodairaFiber>> fibers;

    int euler_sum() const
    {
        int e = 0;
        for (const auto& [pt, f] : fibers) e += f.euler();
        return e;
    }
    const KodairaFiber* fiber_at(const std::string& pt) const
    {
        for (const auto& [p, f] : fibers)
            if (p == pt) return &f;
        return nullptr;
    }
    void validate() const
    {
        if (euler_sum() != 12)
            throw std::invalid_argument(name + ": fiber Euler numbers must sum to 12");
    }
};

/// Fiber product of two rational elliptic surfaces over P^1; the shared
/// points are where both have a singular fiber, and those fibers must all be
/// of type I_b.
struct FiberProductSpec {
    SurfaceSpec s1, s2;

    std::vector<std::string> shared_points() const
    {
        std::vector<std::string> pts;
        for (const auto& [p, f] : s1.fibers)
            if (s2.fiber_at(p)) pts.push_back(p);
        return pts;
    }
    void validate() const
    {
        s1.validate();
        s2.validate();
        for (const auto& p : shared_points()) {
            if (s1.fiber_at(p)->kind != KodairaFiber::Kind::In ||
                s2.fiber_at(p)->kind != KodairaFiber::Kind::In)
                throw std::invalid_argument("shared fiber at " + p + " is not of type I_b");
        }
    }
};

/// e(S1 x_P1 S2) = sum over shared points of e(f1) e(f2).
inline int euler_fiber_product(const FiberProductSpec& spec)
{
    spec.validate();
    int e = 0;
    for (const auto& p : spec.shared_points())
        e += spec.s1.fiber_at(p)->euler() * spec.s2.fiber_at(p)->euler();
    return e;
}

/// Number of ordinary double points: the singular points of an I_b cycle
/// pair up, giving b1(s) b2(s) nodes over each shared point.
inline int node_count(const FiberProductSpec& spec)
{
    spec.validate();
    int n = 0;
    for (const auto& p : spec.shared_points()) {
        const auto* f1 = spec.s1.fiber_at(p);
        const auto* f2 = spec.s2.fiber_at(p);
        if (f1->b < 1 || f2->b < 1)
            throw std::invalid_argument("node count needs I_b fibers with b >= 1 at shared points");
        n += f1->components() * f2->components();
    }
    return n;
}

/// Euler number of the small resolution: each node is replaced by a P^1.
inline int euler_resolved(const FiberProductSpec& spec)
{
    return euler_fiber_product(spec) + node_count(spec);
}

/// h^{1,1} of the resolved fiber product:
/// d + 19 + sum b1 b2 - sum b1 - sum b2 + #shared, with d = 1 when the
/// generic fibers are isogenous and 0 otherwise (an input, not computed).
inline int schoen_h11(const FiberProductSpec& spec, int isogeny_flag = 0)
{
    spec.validate();
    if (isogeny_flag != 0 && isogeny_flag != 1)
        throw std::invalid_argument("isogeny flag must be 0 or 1");
    int sum12 = 0, sum1 = 0, sum2 = 0, count = 0;
    for (const auto& p : spec.shared_points()) {
        int b1 = spec.s1.fiber_at(p)->components();
        int b2 = spec.s2.fiber_at(p)->components();
        sum12 += b1 * b2;
        sum1 += b1;
        sum2 += b2;
        ++count;
    }
    return isogeny_flag + 19 + sum12 - sum1 - sum2 + count;
}

/// (h11, h21) via e = 2(h11 - h21).
inline std::pair<int, int> hodge_pair(const FiberProductSpec& spec, int isogeny_flag = 0)
{
    int h11 = schoen_h11(spec, isogeny_flag);
    int e = euler_resolved(spec);
    if (e % 2 != 0) throw std::runtime_error("hodge_pair: odd Euler number");
    return {h11, h11 - e / 2};
}

/// The five marked rational elliptic surfaces whose pairwise fiber products
/// over {0, infinity} give the mirror families: two copies of the
/// [I5 I5 I1 I1] surface with different free points, and three surfaces from
/// the [I6 I3 I2 I1] and [I7 II I1 I2] configurations.
inline SurfaceSpec surface_T0bar()
{
    return {"T0bar",
            {{"0", KodairaFiber::In(5)},
             {"inf", KodairaFiber::In(5)},
             {"xb1", KodairaFiber::In(1)},
             {"xb2", KodairaFiber::In(1)}}};
}
inline SurfaceSpec surface_T0()
{
    return {"T0",
            {{"0", KodairaFiber::In(5)},
             {"inf", KodairaFiber::In(5)},
             {"x1", KodairaFiber::In(1)},
             {"x2", KodairaFiber::In(1)}}};
}
inline SurfaceSpec surface_T1()
{
    return {"T1",
            {{"0", KodairaFiber::In(6)},
             {"inf", KodairaFiber::In(3)},
             {"y1", KodairaFiber::In(2)},
             {"y2", KodairaFiber::In(1)}}};
}
inline SurfaceSpec surface_T2()
{
    return {"T2",
            {{"0", KodairaFiber::In(7)},
             {"inf", KodairaFiber::In(2)},
             {"z1", KodairaFiber::In(1)},
             {"z2", KodairaFiber::II()}}};
}
inline SurfaceSpec surface_T3()
{
    return {"T3",
            {{"0", KodairaFiber::In(6)},
             {"inf", KodairaFiber::In(2)},
             {"w1", KodairaFiber::In(3)},
             {"w2", KodairaFiber::In(1)}}};
}

inline SurfaceSpec surface_by_name(const std::string& name)
{
    if (name == "T0bar") return surface_T0bar();
    if (name == "T0") return surface_T0();
    if (name == "T1") return surface_T1();
    if (name == "T2") return surface_T2();
    if (name == "T3") return surface_T3();
    throw std::invalid_argument("unknown surface " + name);
}

/// The four fiber products T0bar x_P1 T_i defining the mirror threefolds.
inline FiberProductSpec mirror_fiber_product(int i)
{
    switch (i) {
    case 0: return {surface_T0bar(), surface_T0()};
    case 1: return {surface_T0bar(), surface_T1()};
    case 2: return {surface_T0bar(), surface_T2()};
    case 3: return {surface_T0bar(), surface_T3()};
    default: throw std::invalid_argument("mirror fiber product index must be 0..3");
    }
}

} // namespace mirrorkit
