#pragma once

#include <utility>

#include "hombox/report.hpp"
#include "hombox/structures.hpp"

namespace hombox {

struct ProductOptions {
    bool force = false;  // skip the precondition suites and mark the result unverified
    CheckOptions check;
};

// (a # h)(b # g) = aα(b₁) # (β⁻¹(h) ◁ b₂)g on A ⊗ H, for a right action of A on H.
HomAlgebra smash_product_right(const HomBialgebra& A, const HomAlgebra& H, const ActionMap& act,
                               ProductOptions options = {});

// Δ(a × h) = a₁ × a₂[-1]β⁻¹(h₁) ⊗ α(a₂[0]) × h₂ for a left coaction of H on A.
// H needs its product, so it is passed as a bialgebra.
HomCoalgebra smash_coproduct_left(const HomCoalgebra& A, const HomBialgebra& H, const CoactionMap& coact,
                                  ProductOptions options = {});

// A ⋈ H from a right action of A on H and a left coaction of H on A.
// Throws LawViolation carrying the condition report unless forced.
HomHopfAlgebra bicross_right(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ActionMap& act,
                             const CoactionMap& coact, ProductOptions options = {});

// A ⊗ H from a left action of H on A and a right coaction of A on H:
// (a ⊗ h)(b ⊗ g) = a(h₁ ▷ α⁻¹(b)) ⊗ β(h₂)g,
// Δ(a ⊗ h) = a₁ ⊗ β(h₁(0)) ⊗ α⁻¹(a₂)h₁(1) ⊗ h₂.
HomHopfAlgebra bicross_left(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ActionMap& act,
                            const CoactionMap& coact, ProductOptions options = {});

// The action of H on H^op and the coaction of H^op on H with parameter n.
//   right: x ◁ h = β^{n+1}S⁻¹(h₂)(β⁻¹(x)β^n(h₁)),
//          ρ(h) = β^nS⁻¹(h₂₂)β^{n-1}(h₁) ⊗ β(h₂₁)
//   left:  h ▷ x = (β^n(h₂)β⁻¹(x))β^{n+1}S⁻¹(h₁),
//          ρ(h) = β(h₂₁) ⊗ β^n(h₂₂)β^{n-1}S⁻¹(h₁)
// Throws Singular when S is not invertible.
std::pair<ActionMap, CoactionMap> canonical_action_coaction(const HomHopfAlgebra& H, long long n, Side side);

// H ⋈ H^op (right) or H^op ⊗ H (left) from the canonical data.
HomHopfAlgebra canonical_bicross(const HomHopfAlgebra& H, long long n, Side side, ProductOptions options = {});

}  // namespace hombox
