#pragma once

#include "hombox/products.hpp"
#include "hombox/structures.hpp"

namespace hombox {

// Everything a bicrossproduct is built from. Right side: a right action of A
// on H and a left coaction of H on A. Left side: a left action of H on A and
// a right coaction of A on H.
struct BicrossData {
    Side side;
    HomHopfAlgebra A, H;
    ActionMap action;
    CoactionMap coaction;
};

// The canonical data of H with parameter n: A = H, H = H^op on the right,
// A = H^op, H = H on the left.
BicrossData canonical_bicross_data(const HomHopfAlgebra& H, long long n, Side side);

// Two Hopf objects with a left coaction of H on A and a right coaction of A
// on H, ready for the double crosscoproduct A ⊗ H.
struct MatchedCopair {
    HomHopfAlgebra A, H;
    CoactionMap rho_A;  // A -> H ⊗ A
    CoactionMap rho_H;  // H -> H ⊗ A
};

// (a ⊗ h)(b ⊗ g) = ab ⊗ hg,
// Δ(a ⊗ h) = a₁ ⊗ a₂[-1]h₁(0) ⊗ a₂[0]h₁(1) ⊗ h₂,
// S(a ⊗ h) = S_A(a[0]h(1)) ⊗ S_H(a[-1]h(0)).
HomHopfAlgebra double_crosscoproduct(const MatchedCopair& copair, ProductOptions options = {});

// The copair induced through a pair of dual bases ξ_s, ξ^s.
//   right, from (A, H):  on H ⊗ A*,
//     ρ(h) = ξ^s ⊗ β⁻²(h) ◁ α⁻¹(ξ_s),  ρ(p) = ⟨p, α²(ξ_s[0])⟩ξ^s ⊗ β(ξ_s[-1])
//   left, from (A, H):   on H* ⊗ A,
//     ρ(a) = β⁻¹(e_s) ▷ α⁻²(a) ⊗ e^s,  ρ(u) = α(e_s(1)) ⊗ ⟨u, β²(e_s(0))⟩e^s
// The bicrossproduct conditions are checked first unless forced.
MatchedCopair copair_from_bicross(const BicrossData& data, ProductOptions options = {});

enum class CodoubleVariant { T, That };
const char* variant_name(CodoubleVariant v);

// T(H) on H^op ⊗ H* and T̂(H) on H* ⊗ H^op, with the coproduct taken from the
// simplified closed formulas
//   T: Δ(h ⊗ u) = h₁ ⊗ e^t • (β^{*2}(u₁) • e^s) ⊗ β^{n+1}S⁻¹(e_s)(β⁻²(h₂)β^{n-1}(e_t)) ⊗ u₂
//   T̂: Δ(u ⊗ h) = u₁ ⊗ (β^{n-1}(e_t)β⁻²(h₁))β^{n+1}S⁻¹(e_s) ⊗ (e^s • β^{*2}(u₂)) • e^t ⊗ h₂
// and the componentwise product of H^op and H*. The antipode is the double
// crosscoproduct one for the induced copair. Throws Singular when S is not
// invertible.
HomHopfAlgebra drinfeld_codouble(const HomHopfAlgebra& H, long long n, CodoubleVariant variant);

// The same object through the induced copair and double_crosscoproduct.
HomHopfAlgebra codouble_via_copair(const HomHopfAlgebra& H, long long n, CodoubleVariant variant);

}  // namespace hombox
