#pragma once

// Classical (β = id) versions of the constructions, written as plain loops
// over structure constants with no network code and no β powers.

#include "hombox/structures.hpp"

namespace classical {

using hombox::HomHopfAlgebra;
using hombox::Rational;
using hombox::Tensor;

inline Tensor inverse(const Tensor& m) { return hombox::mat_inverse(m); }

// (pq)(x) = p(x₁)q(x₂) as [p, q, r]
inline Tensor dual_mult(const HomHopfAlgebra& H) {
    const auto d = H.dim();
    Tensor r({d, d, d});
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t x = 0; x < d; ++x) r(p, q, x) = H.comult()(x, p, q);
    return r;
}

// Δ*(u) = Σ u(xy) e^x ⊗ e^y as [u, a, b]
inline Tensor dual_comult(const HomHopfAlgebra& H) {
    const auto d = H.dim();
    Tensor r({d, d, d});
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) r(u, a, b) = H.mult()(a, b, u);
    return r;
}

// x ◁ h = S⁻¹(h₂)(xh₁) as [x, h, o]
inline Tensor conjugation_right(const HomHopfAlgebra& H) {
    const auto d = H.dim();
    const Tensor Si = inverse(H.antipode);
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    Tensor r({d, d, d});
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t h = 0; h < d; ++h)
            for (std::size_t h1 = 0; h1 < d; ++h1)
                for (std::size_t h2 = 0; h2 < d; ++h2) {
                    if (D(h, h1, h2).is_zero()) continue;
                    for (std::size_t p = 0; p < d; ++p) {
                        if (m(x, h1, p).is_zero()) continue;
                        for (std::size_t s = 0; s < d; ++s) {
                            if (Si(s, h2).is_zero()) continue;
                            for (std::size_t o = 0; o < d; ++o)
                                r(x, h, o) += D(h, h1, h2) * m(x, h1, p) * Si(s, h2) * m(s, p, o);
                        }
                    }
                }
    return r;
}

// (a # h)(b # g) = ab₁ # (h ◁ b₂)g for a right action [h, a, o] of A on H,
// factors A major; mult is [(a,h), (b,g), (x,y)]
inline Tensor smash_right(const Tensor& Am, const Tensor& AD, const Tensor& Hm, const Tensor& act) {
    const auto da = Am.dim(0), dh = Hm.dim(0), dd = da * dh;
    Tensor r({dd, dd, dd});
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t h = 0; h < dh; ++h)
            for (std::size_t b = 0; b < da; ++b)
                for (std::size_t g = 0; g < dh; ++g)
                    for (std::size_t b1 = 0; b1 < da; ++b1)
                        for (std::size_t b2 = 0; b2 < da; ++b2) {
                            if (AD(b, b1, b2).is_zero()) continue;
                            for (std::size_t x = 0; x < da; ++x) {
                                if (Am(a, b1, x).is_zero()) continue;
                                for (std::size_t t = 0; t < dh; ++t) {
                                    if (act(h, b2, t).is_zero()) continue;
                                    for (std::size_t y = 0; y < dh; ++y)
                                        r(a * dh + h, b * dh + g, x * dh + y) +=
                                            AD(b, b1, b2) * Am(a, b1, x) * act(h, b2, t) * Hm(t, g, y);
                                }
                            }
                        }
    return r;
}

struct Codouble {
    Tensor mult, comult;
};

// T(H) on H^op ⊗ H*: (h ⊗ p)(g ⊗ q) = gh ⊗ pq,
// Δ(h ⊗ u) = h₁ ⊗ e^t(u₁e^s) ⊗ S⁻¹(e_s)(h₂e_t) ⊗ u₂
inline Codouble codouble_T(const HomHopfAlgebra& H) {
    const auto d = H.dim(), dd = d * d;
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor md = dual_mult(H), Dd = dual_comult(H), Si = inverse(H.antipode);
    Codouble c{Tensor({dd, dd, dd}), Tensor({dd, dd, dd})};
    for (std::size_t h = 0; h < d; ++h)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t g = 0; g < d; ++g)
                for (std::size_t q = 0; q < d; ++q)
                    for (std::size_t x = 0; x < d; ++x)
                        for (std::size_t y = 0; y < d; ++y)
                            c.mult(h * d + p, g * d + q, x * d + y) = m(g, h, x) * md(p, q, y);
    for (std::size_t h = 0; h < d; ++h)
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t h1 = 0; h1 < d; ++h1)
                for (std::size_t h2 = 0; h2 < d; ++h2) {
                    if (D(h, h1, h2).is_zero()) continue;
                    for (std::size_t u1 = 0; u1 < d; ++u1)
                        for (std::size_t u2 = 0; u2 < d; ++u2) {
                            const Rational w = D(h, h1, h2) * Dd(u, u1, u2);
                            if (w.is_zero()) continue;
                            for (std::size_t s = 0; s < d; ++s)
                                for (std::size_t t = 0; t < d; ++t)
                                    for (std::size_t X = 0; X < d; ++X) {
                                        Rational cx;  // coefficient of e^X in e^t(u₁e^s)
                                        for (std::size_t r = 0; r < d; ++r) cx += md(u1, s, r) * md(t, r, X);
                                        if (cx.is_zero()) continue;
                                        for (std::size_t Y = 0; Y < d; ++Y) {
                                            Rational cy;  // coefficient of e_Y in S⁻¹(e_s)(h₂e_t)
                                            for (std::size_t r = 0; r < d; ++r)
                                                for (std::size_t z = 0; z < d; ++z)
                                                    cy += m(h2, t, r) * Si(z, s) * m(z, r, Y);
                                            c.comult(h * d + u, h1 * d + X, Y * d + u2) += w * cx * cy;
                                        }
                                    }
                        }
                }
    return c;
}

// T̂(H) on H* ⊗ H^op: (u ⊗ h)(v ⊗ k) = uv ⊗ kh,
// Δ(u ⊗ h) = u₁ ⊗ (e_th₁)S⁻¹(e_s) ⊗ (e^su₂)e^t ⊗ h₂
inline Codouble codouble_That(const HomHopfAlgebra& H) {
    const auto d = H.dim(), dd = d * d;
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor md = dual_mult(H), Dd = dual_comult(H), Si = inverse(H.antipode);
    Codouble c{Tensor({dd, dd, dd}), Tensor({dd, dd, dd})};
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t h = 0; h < d; ++h)
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t x = 0; x < d; ++x)
                        for (std::size_t y = 0; y < d; ++y)
                            c.mult(u * d + h, v * d + k, x * d + y) = md(u, v, x) * m(k, h, y);
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t h = 0; h < d; ++h)
            for (std::size_t h1 = 0; h1 < d; ++h1)
                for (std::size_t h2 = 0; h2 < d; ++h2) {
                    if (D(h, h1, h2).is_zero()) continue;
                    for (std::size_t u1 = 0; u1 < d; ++u1)
                        for (std::size_t u2 = 0; u2 < d; ++u2) {
                            const Rational w = D(h, h1, h2) * Dd(u, u1, u2);
                            if (w.is_zero()) continue;
                            for (std::size_t s = 0; s < d; ++s)
                                for (std::size_t t = 0; t < d; ++t)
                                    for (std::size_t X = 0; X < d; ++X) {
                                        Rational cx;  // e_X in (e_th₁)S⁻¹(e_s)
                                        for (std::size_t r = 0; r < d; ++r)
                                            for (std::size_t z = 0; z < d; ++z)
                                                cx += m(t, h1, r) * Si(z, s) * m(r, z, X);
                                        if (cx.is_zero()) continue;
                                        for (std::size_t Y = 0; Y < d; ++Y) {
                                            Rational cy;  // e^Y in (e^su₂)e^t
                                            for (std::size_t r = 0; r < d; ++r) cy += md(s, u2, r) * md(r, t, Y);
                                            c.comult(u * d + h, u1 * d + X, Y * d + h2) += w * cx * cy;
                                        }
                                    }
                        }
                }
    return c;
}

// ζ(h ⊗ p, g ⊗ q) = q(h)p(1)ε(g) on T(H); ζ(u ⊗ h, v ⊗ k) = v(h)u(1)ε(k) on T̂(H)
inline Tensor zeta(const HomHopfAlgebra& H, bool hat) {
    const auto d = H.dim(), dd = d * d;
    Tensor z({dd, dd});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c)
                for (std::size_t e = 0; e < d; ++e) {
                    // T: a=h b=p c=g e=q ; T̂: a=u b=h c=v e=k
                    const bool pair = hat ? c == b : e == a;
                    const Rational w = hat ? H.unit()[a] * H.counit()[e] : H.unit()[b] * H.counit()[c];
                    if (pair) z(a * d + b, c * d + e) = w;
                }
    return z;
}

// left: σ(h₁, g₁)h₂g₂; right: h₁g₁σ(h₂, g₂)
inline Tensor twist(const Tensor& m, const Tensor& D, const Tensor& sigma, bool left) {
    const auto d = m.dim(0);
    Tensor r({d, d, d});
    for (std::size_t h = 0; h < d; ++h)
        for (std::size_t g = 0; g < d; ++g)
            for (std::size_t h1 = 0; h1 < d; ++h1)
                for (std::size_t h2 = 0; h2 < d; ++h2) {
                    if (D(h, h1, h2).is_zero()) continue;
                    for (std::size_t g1 = 0; g1 < d; ++g1)
                        for (std::size_t g2 = 0; g2 < d; ++g2) {
                            if (D(g, g1, g2).is_zero()) continue;
                            const Rational s = left ? sigma(h1, g1) : sigma(h2, g2);
                            if (s.is_zero()) continue;
                            for (std::size_t o = 0; o < d; ++o)
                                r(h, g, o) += D(h, h1, h2) * D(g, g1, g2) * s * (left ? m(h2, g2, o) : m(h1, g1, o));
                        }
                }
    return r;
}

// H # H*: (h # p)(g # q) = hg₁ # (p ← g₂)q with (p ← g)(x) = p(gx)
inline Tensor heisenberg(const HomHopfAlgebra& H) {
    const auto d = H.dim(), dd = d * d;
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor md = dual_mult(H);
    Tensor r({dd, dd, dd});
    for (std::size_t h = 0; h < d; ++h)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t g = 0; g < d; ++g)
                for (std::size_t q = 0; q < d; ++q)
                    for (std::size_t g1 = 0; g1 < d; ++g1)
                        for (std::size_t g2 = 0; g2 < d; ++g2) {
                            if (D(g, g1, g2).is_zero()) continue;
                            for (std::size_t x = 0; x < d; ++x) {
                                if (m(h, g1, x).is_zero()) continue;
                                for (std::size_t a = 0; a < d; ++a) {
                                    // (p ← g₂) = Σ_a p(g₂e_a) e^a
                                    const Rational pa = m(g2, a, p);
                                    if (pa.is_zero()) continue;
                                    for (std::size_t y = 0; y < d; ++y)
                                        r(h * d + p, g * d + q, x * d + y) +=
                                            D(g, g1, g2) * m(h, g1, x) * pa * md(a, q, y);
                                }
                            }
                        }
    return r;
}

// H* # H: (u # h)(v # k) = u(h₁ → v) # h₂k with (h → v)(x) = v(xh)
inline Tensor heisenberg_dual(const HomHopfAlgebra& H) {
    const auto d = H.dim(), dd = d * d;
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor md = dual_mult(H);
    Tensor r({dd, dd, dd});
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t h = 0; h < d; ++h)
            for (std::size_t v = 0; v < d; ++v)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t h1 = 0; h1 < d; ++h1)
                        for (std::size_t h2 = 0; h2 < d; ++h2) {
                            if (D(h, h1, h2).is_zero()) continue;
                            for (std::size_t a = 0; a < d; ++a) {
                                const Rational va = m(a, h1, v);
                                if (va.is_zero()) continue;
                                for (std::size_t x = 0; x < d; ++x) {
                                    if (md(u, a, x).is_zero()) continue;
                                    for (std::size_t y = 0; y < d; ++y)
                                        r(u * d + h, v * d + k, x * d + y) +=
                                            D(h, h1, h2) * va * md(u, a, x) * m(h2, k, y);
                                }
                            }
                        }
    return r;
}

}  // namespace classical
