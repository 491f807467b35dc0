#pragma once

#include <optional>

#include "hombox/structures.hpp"

namespace hombox {

// (H*, β^{*-1}) in the coordinate basis e^s of H: product and coproduct are
// the transposes of Δ and m, the automorphism is the transpose of β⁻¹.
HomHopfAlgebra dual_hopf(const HomHopfAlgebra& H);
HomBialgebra dual_bialgebra(const HomBialgebra& H);

struct Opposite {
    HomBialgebra bialgebra;
    std::optional<Tensor> antipode;  // S⁻¹, only when requested
};

// Reversed multiplication, everything else unchanged.
Opposite opposite(const HomHopfAlgebra& H, bool derive_antipode = false);
HomBialgebra opposite(const HomBialgebra& H);
// H^op with S⁻¹ attached and the provenance flagged as derived. Throws
// Singular when S is not invertible.
HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& H);

// (A, α∘m, Δ∘α⁻¹, α) from a Hopf algebra with identity automorphism.
HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Tensor& automorphism);

// (h ⊣ u)(h') = u(β⁻²(h')β^i(h)), a left action of H on H*.
ActionMap regular_action_left(const HomHopfAlgebra& H, long long i);
// (u ◁ h)(h') = u(β^j(h)β⁻²(h')), a right action of H on H*.
ActionMap regular_action_right(const HomHopfAlgebra& H, long long j);

// (u • v)(h) = u(h₁)v(h₂).
Tensor convolve(const Tensor& u, const Tensor& v, const HomHopfAlgebra& H);

}  // namespace hombox
