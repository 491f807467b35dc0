#pragma once

#include <optional>
#include <utility>

#include "hombox/codouble.hpp"
#include "hombox/report.hpp"
#include "hombox/structures.hpp"

namespace hombox {

// ζ[i, j] = ζ(e_i, e_j) on the space named by label.
struct BilinearForm {
    std::string space;
    Tensor matrix;
};

// (f * g)(h, k) = f(h₁, k₁)g(h₂, k₂) on C ⊗ C.
Tensor convolve_forms(const Tensor& f, const Tensor& g, const HomBialgebra& C);

// Candidate convolution units ε∘β^k ⊗ ε∘β^k. Since ε∘β = ε they all agree,
// the power is kept so the check can state which one it used.
constexpr long long kConvolutionUnitPower = 0;
Tensor convolution_unit(const HomBialgebra& C, long long k = kConvolutionUnitPower);

// True when f * g and g * f both equal the unit of power k.
bool is_convolution_inverse(const Tensor& f, const Tensor& g, const HomBialgebra& C,
                            long long k = kConvolutionUnitPower);

// Solves f * x = ε ⊗ ε and x * f = ε ⊗ ε together by exact elimination.
// Throws NotInvertible when the system has no solution.
BilinearForm convolution_inverse(const BilinearForm& f, const HomBialgebra& C);
BilinearForm convolution_inverse(const BilinearForm& f, const HomHopfAlgebra& C);

struct CqtForm {
    BilinearForm zeta;
    BilinearForm zeta_inverse;   // as displayed, ⟨S*(q), β^{-n}(h)⟩p(1)ε(g)
    bool inverse_verified = false;
    std::string note;
};

// The coquasitriangular form of the codouble:
//   T: ζ(h ⊗ p, g ⊗ q) = ⟨q, β^{-n}(h)⟩p(1)ε(g)
//   T̂: ζ(u ⊗ h, v ⊗ k) = ⟨v, β^{-n}(h)⟩u(1)ε(k)
// with the displayed inverse obtained by replacing q (or v) with S*(q).
// When the displayed inverse fails every candidate unit, strict mode throws
// ConventionMismatch; otherwise the failure is recorded in note.
CqtForm codouble_cqt_form(const HomHopfAlgebra& TH, const HomHopfAlgebra& H, long long n, CodoubleVariant variant,
                          bool strict = true);

// left: σ(x, y) = ζ(y, x); right: σ = ζ.
BilinearForm cocycle_from_cqt(const BilinearForm& zeta, Side side);

// left: h ·σ g = σ(h₁, g₁)β(h₂g₂); right: h ·σ g = β(h₁g₁)σ(h₂, g₂).
// The cocycle suite of the matching side is required to pass unless forced.
HomAlgebra twist(const HomHopfAlgebra& H, const BilinearForm& sigma, Side side, ProductOptions options = {});

enum class HeisenbergVariant { H, Hdual };

// H: on H ⊗ H*, (h # p)(g # q) = hβ(g₁) # (p∘β ← g₂) • q with
//    (p ← h)(x) = p(β^{-n-1}(h)β⁻²(x)).
// Hdual: on H* ⊗ H, (u # h)(v # k) = u • (h₁ → v∘β) # β(h₂)k with
//    (h → u)(x) = u(β⁻²(x)β^{-n-1}(h)).
HomAlgebra heisenberg_double(const HomHopfAlgebra& H, long long n, HeisenbergVariant variant);

// Compares the left twist of T(H) by the flipped ζ with the Heisenberg double
// on H ⊗ H* (variant T), or the right twist of T̂(H) by ζ with the one on
// H* ⊗ H (That). Both sides share coordinates. heisenberg_n overrides the
// parameter of the Heisenberg side.
CheckReport verify_thm510(const HomHopfAlgebra& H, long long n, CodoubleVariant variant,
                          std::optional<long long> heisenberg_n = std::nullopt, CheckOptions options = {});

// Reads Δ of source as a coaction on twisted (right: carrier ⊗ coactor,
// left: coactor ⊗ carrier) and checks the comodule algebra laws.
CheckReport comodule_algebra_from_twist(const HomAlgebra& twisted, const HomHopfAlgebra& source, Side side,
                                        CheckOptions options = {});

}  // namespace hombox
