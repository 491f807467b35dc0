#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hombox/structures.hpp"

namespace hombox {

// One space an expression can live in. Coactions name the space of their
// coactor part.
struct SweedlerSpace {
    std::size_t dim = 0;
    Tensor mult, unit, comult, counit, beta;
    std::optional<Tensor> antipode;
    std::string dual_of;  // name of the space this one is the dual of, if any
    std::optional<CoactionMap> left_coaction;
    std::string left_coactor;
    std::optional<CoactionMap> right_coaction;
    std::string right_coactor;
};

SweedlerSpace sweedler_space(const HomBialgebra& b);
SweedlerSpace sweedler_space(const HomHopfAlgebra& h);

struct SweedlerEnv {
    std::map<std::string, SweedlerSpace> spaces;
    std::map<std::string, std::string> variables;  // variable -> space; others use default_space
    std::map<std::string, long long> params;       // integer symbols usable in exponents
    std::string default_space;
};

// Evaluates an expression written in index notation.
//
//   h_1, h_{21}, a_{2[-1]}, h_{1(0)}   iterated coproducts and coactions, applied
//                                      literally in the written order
//   S(x), S^{-1}(x), β^{n+1}(x)        antipode and automorphism powers; ASCII
//   beta, alpha, eps, <u,x> also work  spellings beta^k, alpha^k, eps(x)
//   ε(x), ⟨u, x⟩                       counit, pairing of a dual with a primal
//   1_H, 2, -1/3                       unit of a space, scalar coefficients
//   xy, x·y, x ⊗ y, x + y              products, tensor factors, sums
//
// Variables are single letters with optional primes, so ab is a product.
// Every variable must be bound to a basis index. The result has one axis per
// tensor factor, or rank 0 for a scalar.
Tensor sweedler_eval(const std::string& expr, const std::map<std::string, std::size_t>& bindings,
                     const SweedlerEnv& env);

// Same expression as a multilinear map of the listed variables: the result's
// leading axes index those variables' basis inputs.
Tensor sweedler_map(const std::string& expr, const std::vector<std::string>& inputs, const SweedlerEnv& env);

}  // namespace hombox
