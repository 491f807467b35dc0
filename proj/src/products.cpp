#include "hombox/products.hpp"

#include "composite.hpp"
#include "hombox/conditions.hpp"
#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/net.hpp"

namespace hombox {

using detail::collect_pairs;
using detail::composite_carrier;
using detail::kron_vector;

namespace {

const std::vector<std::string> kProductOrder = {"@a", "@h", "@b", "@g", "L", "R"};

// aα(b₁) ⋈ (β⁻¹(h) ◁ b₂)g on legs a, h, b, g; result legs L, R.
Net right_smash(const Net& n, const HomAlgebra& A, const Tensor& A_comult, const HomAlgebra& H, const Tensor& act) {
    return n.split("b", A_comult, "b1", "b2")
        .map("b1", A.beta())
        .join("a", "b1", A.mult, "L")
        .map("h", mat_inverse(H.beta()))
        .apply(act, {"h", "b2"}, {"hb"})
        .join("hb", "g", H.mult, "R");
}

// a(h₁ ▷ α⁻¹(b)) ⊗ β(h₂)g
Net left_smash(const Net& n, const HomAlgebra& A, const HomAlgebra& H, const Tensor& H_comult, const Tensor& act) {
    return n.split("h", H_comult, "h1", "h2")
        .map("b", mat_inverse(A.beta()))
        .apply(act, {"h1", "b"}, {"hb"})
        .join("a", "hb", A.mult, "L")
        .map("h2", H.beta())
        .join("h2", "g", H.mult, "R");
}

Net four_inputs(std::size_t da, std::size_t dh) { return Net::inputs({{"a", da}, {"h", dh}, {"b", da}, {"g", dh}}); }

void mark(Carrier& c, bool unverified) { c.provenance.unverified = unverified; }

}  // namespace

HomAlgebra smash_product_right(const HomBialgebra& A, const HomAlgebra& H, const ActionMap& act,
                               ProductOptions options) {
    if (!options.force)
        require_pass(check_action_laws(act, A, H, ActionLevel::module_algebra, Side::right, options.check),
                     "smash product");
    const auto da = A.dim(), dh = H.dim();
    Carrier c = composite_carrier(A.carrier(), H.carrier, "smash-right");
    mark(c, options.force);
    HomAlgebra r{c, collect_pairs(right_smash(four_inputs(da, dh), A.algebra, A.comult(), H, act.tensor),
                                  kProductOrder, da, dh),
                 kron_vector(A.unit(), H.unit)};
    r.mult = r.mult.relabeled({c.label, c.label, c.label});
    r.unit = r.unit.relabeled({c.label});
    validate(r);
    return r;
}

HomCoalgebra smash_coproduct_left(const HomCoalgebra& A, const HomBialgebra& H, const CoactionMap& coact,
                                  ProductOptions options) {
    if (!options.force)
        require_pass(check_coaction_laws(coact, H, A, CoactionLevel::comodule_coalgebra, Side::left, options.check),
                     "smash coproduct");
    const auto da = A.dim(), dh = H.dim();
    Carrier c = composite_carrier(A.carrier, H.carrier(), "smash-coproduct-left");
    mark(c, options.force);
    Net n = Net::inputs({{"a", da}, {"h", dh}})
                .split("a", A.comult, "a1", "a2")
                .apply(coact.tensor, {"a2"}, {"am", "a0"})
                .split("h", H.comult(), "h1", "h2")
                .map("h1", mat_inverse(H.beta()))
                .join("am", "h1", H.mult(), "X")
                .map("a0", A.beta());
    HomCoalgebra r{c, collect_pairs(n, {"@a", "@h", "a1", "X", "a0", "h2"}, da, dh), kron_vector(A.counit, H.counit())};
    r.comult = r.comult.relabeled({c.label, c.label, c.label});
    r.counit = r.counit.relabeled({dual_label(c.label)});
    validate(r);
    return r;
}

HomHopfAlgebra bicross_right(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ActionMap& act,
                             const CoactionMap& coact, ProductOptions options) {
    if (!options.force) {
        ConditionData data;
        data.A = A.bialgebra;
        data.H = H.bialgebra;
        data.action = act;
        data.coaction_A = coact;
        require_pass(check_condition_set(ConditionSet::bicross_right, data, options.check), "right bicrossproduct");
    }
    const auto da = A.dim(), dh = H.dim();
    Carrier c = composite_carrier(A.carrier(), H.carrier(), "bicross-right");
    mark(c, options.force);

    Tensor m = collect_pairs(right_smash(four_inputs(da, dh), A.algebra(), A.comult(), H.algebra(), act.tensor),
                             kProductOrder, da, dh);
    Tensor D = collect_pairs(Net::inputs({{"a", da}, {"h", dh}})
                                 .split("a", A.comult(), "a1", "a2")
                                 .apply(coact.tensor, {"a2"}, {"am", "a0"})
                                 .split("h", H.comult(), "h1", "h2")
                                 .map("h1", mat_inverse(H.beta()))
                                 .join("am", "h1", H.mult(), "X")
                                 .map("a0", A.beta()),
                             {"@a", "@h", "a1", "X", "a0", "h2"}, da, dh);
    // S(a ⋈ h) = (1 ⋈ S_H(β⁻¹(a[-1])β⁻²(h)))(S_A(a[0]) ⋈ 1)
    Net s = Net::inputs({{"a", da}, {"h", dh}})
                .apply(coact.tensor, {"a"}, {"am", "b"})
                .map("am", mat_power(H.beta(), -1))
                .map("h", mat_power(H.beta(), -2))
                .join("am", "h", H.mult(), "y")
                .map("y", H.antipode)
                .map("b", A.antipode);
    s = right_smash(s.rename("y", "h") * Net::constant(A.unit(), {"a"}) * Net::constant(H.unit(), {"g"}),
                    A.algebra(), A.comult(), H.algebra(), act.tensor);
    Tensor S = transpose(collect_pairs(s, {"@a", "@h", "L", "R"}, da, dh));
    return make_hopf(c, m, kron_vector(A.unit(), H.unit()), D, kron_vector(A.counit(), H.counit()), S);
}

HomHopfAlgebra bicross_left(const HomHopfAlgebra& A, const HomHopfAlgebra& H, const ActionMap& act,
                            const CoactionMap& coact, ProductOptions options) {
    if (!options.force) {
        ConditionData data;
        data.A = A.bialgebra;
        data.H = H.bialgebra;
        data.action = act;
        data.coaction_H = coact;
        require_pass(check_condition_set(ConditionSet::bicross_left, data, options.check), "left bicrossproduct");
    }
    const auto da = A.dim(), dh = H.dim();
    Carrier c = composite_carrier(A.carrier(), H.carrier(), "bicross-left");
    mark(c, options.force);

    Tensor m = collect_pairs(left_smash(four_inputs(da, dh), A.algebra(), H.algebra(), H.comult(), act.tensor),
                             kProductOrder, da, dh);
    Tensor D = collect_pairs(Net::inputs({{"a", da}, {"h", dh}})
                                 .split("a", A.comult(), "a1", "a2")
                                 .split("h", H.comult(), "h1", "h2")
                                 .apply(coact.tensor, {"h1"}, {"h10", "h11"})
                                 .map("h10", H.beta())
                                 .map("a2", mat_inverse(A.beta()))
                                 .join("a2", "h11", A.mult(), "X"),
                             {"@a", "@h", "a1", "h10", "X", "h2"}, da, dh);
    // S(a ⊗ h) = (1 ⊗ S_H(h(0)))(S_A(α⁻²(a)α⁻¹(h(1))) ⊗ 1)
    Net s = Net::inputs({{"a", da}, {"h", dh}})
                .apply(coact.tensor, {"h"}, {"h0", "h1"})
                .map("h0", H.antipode)
                .map("a", mat_power(A.beta(), -2))
                .map("h1", mat_power(A.beta(), -1))
                .join("a", "h1", A.mult(), "b")
                .map("b", A.antipode);
    s = left_smash(s.rename("h0", "h") * Net::constant(A.unit(), {"a"}) * Net::constant(H.unit(), {"g"}),
                   A.algebra(), H.algebra(), H.comult(), act.tensor);
    Tensor S = transpose(collect_pairs(s, {"@a", "@h", "L", "R"}, da, dh));
    return make_hopf(c, m, kron_vector(A.unit(), H.unit()), D, kron_vector(A.counit(), H.counit()), S);
}

std::pair<ActionMap, CoactionMap> canonical_action_coaction(const HomHopfAlgebra& H, long long n, Side side) {
    const auto d = H.dim();
    const Tensor& B = H.beta();
    const Tensor Si = mat_inverse(H.antipode);
    auto P = [&](long long k) { return mat_power(B, k); };
    const std::string op_label = H.label() + "^op";
    if (side == Side::right) {
        Net act = Net::inputs({{"x", d}, {"h", d}})
                      .split("h", H.comult(), "h1", "h2")
                      .map("x", P(-1))
                      .map("h1", P(n))
                      .join("x", "h1", H.mult(), "p")
                      .map("h2", matmul(P(n + 1), Si))
                      .join("h2", "p", H.mult(), "o");
        Net co = Net::input("h", d)
                     .split("h", H.comult(), "h1", "h2")
                     .split("h2", H.comult(), "h21", "h22")
                     .map("h22", matmul(P(n), Si))
                     .map("h1", P(n - 1))
                     .join("h22", "h1", H.mult(), "l")
                     .map("h21", B);
        return {ActionMap{Side::right, H.label(), op_label, B, act.collect({"@x", "@h", "o"})},
                CoactionMap{Side::left, op_label, H.label(), B, co.collect({"@h", "l", "h21"})}};
    }
    Net act = Net::inputs({{"h", d}, {"x", d}})
                  .split("h", H.comult(), "h1", "h2")
                  .map("h2", P(n))
                  .map("x", P(-1))
                  .join("h2", "x", H.mult(), "p")
                  .map("h1", matmul(P(n + 1), Si))
                  .join("p", "h1", H.mult(), "o");
    Net co = Net::input("h", d)
                 .split("h", H.comult(), "h1", "h2")
                 .split("h2", H.comult(), "h21", "h22")
                 .map("h21", B)
                 .map("h22", P(n))
                 .map("h1", matmul(P(n - 1), Si))
                 .join("h22", "h1", H.mult(), "r");
    return {ActionMap{Side::left, H.label(), op_label, B, act.collect({"@h", "@x", "o"})},
            CoactionMap{Side::right, op_label, H.label(), B, co.collect({"@h", "h21", "r"})}};
}

HomHopfAlgebra canonical_bicross(const HomHopfAlgebra& H, long long n, Side side, ProductOptions options) {
    const HomHopfAlgebra Hop = opposite_hopf(H);
    auto [act, co] = canonical_action_coaction(H, n, side);
    HomHopfAlgebra r = side == Side::right ? bicross_right(H, Hop, act, co, options)
                                           : bicross_left(Hop, H, act, co, options);
    Provenance p = r.carrier().provenance;
    p.construction = side == Side::right ? "canonical-bicross-right" : "canonical-bicross-left";
    p.inputs = {H.label()};
    p.n = n;
    set_provenance(r, p);
    return r;
}

}  // namespace hombox
