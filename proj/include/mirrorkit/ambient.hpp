#pragma once

#include <mirrorkit/graded_ring.hpp>

#include <array>
#include <memory>

namespace mirrorkit {

/// Classical triple intersections kappa_abc in a two-divisor basis,
/// symmetric; indexed by the number of times the second divisor appears.
struct TripleIntersections {
    std::array<Rational, 4> k; // k[j] = kappa with j copies of the second divisor
    const Rational& operator()(int a, int b, int c) const
    {
        return k[static_cast<std::size_t>(a + b + c)];
    }
};

/// Ambient geometry of X1: the projective bundle P(O(-H1) + O(-H2)) over
/// G(2,5) x P2 x P2, an 11-fold. X1 is cut out by 8 relative hyperplanes, so
/// integrals over X1 of restricted classes are ambient integrals against
/// L^8. All X1 pairings used by the A-model pipeline happen here.
class AmbientX1 {
public:
    AmbientX1()
    {
        g25 = ring_grassmannian_2_5();
        p2 = ring_projective_space(2);
        gp = ring_product(g25, p2);
        base = ring_product(gp.ring, p2);
        const GradedRing& B = base.ring;
        sigma1_b = B.basis(base.index(gp.index(1, 0), 0)); // sigma_1 (degree sorts s10 at 1)
        h1_b = B.basis(base.index(gp.index(0, 1), 0));
        h2_b = B.basis(base.index(0, 1));
        RingClass c1 = Rational(-1) * (sigma1_b + h1_b + h2_b);
        RingClass c2 = sigma1_b * (h1_b + h2_b);
        bundle = ring_projective_bundle(B, {c1, c2}, 2);
        L = bundle.xi();
        sigma1 = bundle.lift(sigma1_b);
        h[0] = bundle.lift(h1_b);
        h[1] = bundle.lift(h2_b);
        L8 = ring().one();
        for (int i = 0; i < 8; ++i) L8 = L8 * L;
    }
    AmbientX1(const AmbientX1&) = delete;
    AmbientX1& operator=(const AmbientX1&) = delete;

    const GradedRing& ring() const { return bundle.ring; }

    /// integral over X1 of a restricted ambient class
    Rational integrate_x1(const RingClass& a) const { return ring().integrate(L8 * a); }

    /// <a, D_i> pairing on X1 (i in {0,1})
    Rational pair_divisor(const RingClass& a, int i) const { return integrate_x1(a * h[i]); }

    TripleIntersections kappa() const
    {
        TripleIntersections t;
        for (int j = 0; j <= 3; ++j) {
            RingClass w = L8;
            for (int s = 0; s < 3 - j; ++s) w = w * h[0];
            for (int s = 0; s < j; ++s) w = w * h[1];
            t.k[j] = ring().integrate(w);
        }
        return t;
    }

    /// D_1,D_2 components of the restriction of a degree-2 ambient class:
    /// L, sigma_1 and h_1+h_2 all restrict to D_1+D_2 on X1.
    std::array<Rational, 2> divisor_components(const RingClass& a) const
    {
        Rational cl = a.coord(bundle.index(1, 0));
        Rational cs = a.coord(bundle.index(0, base.index(gp.index(1, 0), 0)));
        Rational c1 = a.coord(bundle.index(0, base.index(gp.index(0, 1), 0)));
        Rational c2 = a.coord(bundle.index(0, base.index(0, 1)));
        return {cl + cs + c1, cl + cs + c2};
    }

    GradedRing g25, p2;
    ProductRing gp, base;
    BundleRing bundle;
    RingClass sigma1_b, h1_b, h2_b;
    RingClass L, sigma1;
    std::array<RingClass, 2> h;
    RingClass L8;
};

/// Ambient geometry of X0: P(O(-H1) + O(-H2)) over G(2,5) x G(2,5), a
/// 13-fold; X0 is cut out by 10 relative hyperplanes.
class AmbientX0 {
public:
    AmbientX0()
    {
        g25 = ring_grassmannian_2_5();
        base = ring_product(g25, g25);
        const GradedRing& B = base.ring;
        s1a = B.basis(base.index(1, 0));
        s1b = B.basis(base.index(0, 1));
        RingClass c1 = Rational(-1) * (s1a + s1b);
        RingClass c2 = s1a * s1b;
        bundle = ring_projective_bundle(B, {c1, c2}, 2);
        L = bundle.xi();
        L10 = ring().one();
        for (int i = 0; i < 10; ++i) L10 = L10 * L;
    }
    AmbientX0(const AmbientX0&) = delete;
    AmbientX0& operator=(const AmbientX0&) = delete;

    const GradedRing& ring() const { return bundle.ring; }
    Rational integrate_x0(const RingClass& a) const { return ring().integrate(L10 * a); }
    /// the single divisor D = L|_{X0}; ambient representative L
    Rational pair_divisor(const RingClass& a) const { return integrate_x0(a * L); }

    Rational kappa() const { return integrate_x0(L * L * L); } // int_{X0} D^3

    /// D-component of a restricted degree-2 class (L, sigma_1 x 1 and
    /// 1 x sigma_1 all restrict to D)
    Rational divisor_component(const RingClass& a) const
    {
        return a.coord(bundle.index(1, 0)) + a.coord(bundle.index(0, base.index(1, 0))) +
               a.coord(bundle.index(0, base.index(0, 1)));
    }

    GradedRing g25;
    ProductRing base;
    BundleRing bundle;
    RingClass s1a, s1b, L, L10;
};

/// Ambient geometry of Y1: P(O(-H1') + O(-H2')) over G(2,5) x P(K1^{+3}),
/// a 14-fold; Y1 is cut out by 11 relative hyperplanes. K1 is the rank-2
/// kernel bundle 0 -> K1 -> H^0(P2,O(1)) x O -> O(1) -> 0, so
/// c(K1^{+3}) = (1 - h + h^2)^3 = 1 - 3h + 6h^2 on P2.
class AmbientY1 {
public:
    AmbientY1()
    {
        g25 = ring_grassmannian_2_5();
        p2 = ring_projective_space(2);
        RingClass h = p2.basis(1), h2cl = p2.basis(2);
        inner = ring_projective_bundle(p2, {Rational(-3) * h, Rational(6) * h2cl}, 6);
        base = ring_product(g25, inner.ring);
        const GradedRing& B = base.ring;
        sigma1_b = B.basis(base.index(1, 0));
        xi_b = B.basis(base.index(0, inner.index(1, 0)));
        h_b = B.basis(base.index(0, inner.index(0, 1)));
        RingClass c1 = Rational(-1) * (sigma1_b + xi_b);
        RingClass c2 = sigma1_b * xi_b;
        bundle = ring_projective_bundle(B, {c1, c2}, 2);
        L = bundle.xi();
        D = bundle.lift(h_b);
        L11 = ring().one();
        for (int i = 0; i < 11; ++i) L11 = L11 * L;
    }
    AmbientY1(const AmbientY1&) = delete;
    AmbientY1& operator=(const AmbientY1&) = delete;

    const GradedRing& ring() const { return bundle.ring; }
    Rational integrate_y1(const RingClass& a) const { return ring().integrate(L11 * a); }

    /// kappa in the basis (L', D'): k[j] has j copies of D'.
    TripleIntersections kappa() const
    {
        TripleIntersections t;
        for (int j = 0; j <= 3; ++j) {
            RingClass w = L11;
            for (int s = 0; s < 3 - j; ++s) w = w * L;
            for (int s = 0; s < j; ++s) w = w * D;
            t.k[j] = ring().integrate(w);
        }
        return t;
    }

    GradedRing g25, p2;
    BundleRing inner;
    ProductRing base;
    BundleRing bundle;
    RingClass sigma1_b, xi_b, h_b;
    RingClass L, D, L11;
};

} // namespace mirrorkit
