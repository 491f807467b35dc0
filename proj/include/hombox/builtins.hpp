#pragma once

#include <string>
#include <vector>

#include "hombox/structures.hpp"

namespace hombox {

// The group algebra k[Cₙ] on the basis 1, g, g², ... with β = id.
HomHopfAlgebra group_algebra(std::size_t n);
// Sweedler's four-dimensional algebra on 1, g, x, gx with g² = 1, x² = 0,
// xg = −gx, Δg = g ⊗ g, Δx = x ⊗ 1 + g ⊗ x and β = id.
HomHopfAlgebra classical_sweedler4();

// k, group-c2, group-c3, group-c3-inv, sweedler4, classical-sweedler4 and
// dual-of:<name>. lambda scales x in sweedler4. Every result passes the hopf
// suite before it is returned; LawViolation otherwise.
HomHopfAlgebra builtin(const std::string& name, const Rational& lambda = 2);
std::vector<std::string> builtin_names();

}  // namespace hombox
