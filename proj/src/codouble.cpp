#include "hombox/codouble.hpp"

#include "composite.hpp"
#include "hombox/conditions.hpp"
#include "hombox/constructions.hpp"
#include "hombox/net.hpp"

namespace hombox {

using detail::collect_pairs;
using detail::composite_carrier;
using detail::kron_vector;

namespace {

Tensor componentwise_product(const HomAlgebra& A, const HomAlgebra& H) {
    const auto da = A.dim(), dh = H.dim();
    Net n = Net::inputs({{"a", da}, {"h", dh}, {"b", da}, {"g", dh}})
                .join("a", "b", A.mult, "L")
                .join("h", "g", H.mult, "R");
    return collect_pairs(n, {"@a", "@h", "@b", "@g", "L", "R"}, da, dh);
}

Tensor copair_antipode(const MatchedCopair& c) {
    const auto da = c.A.dim(), dh = c.H.dim();
    Net n = Net::inputs({{"a", da}, {"h", dh}})
                .apply(c.rho_A.tensor, {"a"}, {"am", "a0"})
                .apply(c.rho_H.tensor, {"h"}, {"h0", "h1"})
                .join("a0", "h1", c.A.mult(), "P")
                .join("am", "h0", c.H.mult(), "Q")
                .map("P", c.A.antipode)
                .map("Q", c.H.antipode);
    return transpose(collect_pairs(n, {"@a", "@h", "P", "Q"}, da, dh));
}

Tensor copair_comult(const MatchedCopair& c) {
    const auto da = c.A.dim(), dh = c.H.dim();
    Net n = Net::inputs({{"a", da}, {"h", dh}})
                .split("a", c.A.comult(), "a1", "a2")
                .split("h", c.H.comult(), "h1", "h2")
                .apply(c.rho_A.tensor, {"a2"}, {"am", "a0"})
                .apply(c.rho_H.tensor, {"h1"}, {"h0", "h11"})
                .join("am", "h0", c.H.mult(), "X")
                .join("a0", "h11", c.A.mult(), "Y");
    return collect_pairs(n, {"@a", "@h", "a1", "X", "Y", "h2"}, da, dh);
}

}  // namespace

BicrossData canonical_bicross_data(const HomHopfAlgebra& H, long long n, Side side) {
    auto [act, co] = canonical_action_coaction(H, n, side);
    HomHopfAlgebra Hop = opposite_hopf(H);
    if (side == Side::right) return BicrossData{side, H, Hop, act, co};
    return BicrossData{side, Hop, H, act, co};
}

HomHopfAlgebra double_crosscoproduct(const MatchedCopair& c, ProductOptions options) {
    if (!options.force) {
        ConditionData data;
        data.A = c.A.bialgebra;
        data.H = c.H.bialgebra;
        data.coaction_A = c.rho_A;
        data.coaction_H = c.rho_H;
        require_pass(check_condition_set(ConditionSet::matched_copair, data, options.check),
                     "double crosscoproduct");
    }
    Carrier carrier = composite_carrier(c.A.carrier(), c.H.carrier(), "double-crosscoproduct");
    carrier.provenance.unverified = options.force;
    return make_hopf(carrier, componentwise_product(c.A.algebra(), c.H.algebra()),
                     kron_vector(c.A.unit(), c.H.unit()), copair_comult(c), kron_vector(c.A.counit(), c.H.counit()),
                     copair_antipode(c));
}

MatchedCopair copair_from_bicross(const BicrossData& b, ProductOptions options) {
    if (!options.force) {
        ConditionData data;
        data.A = b.A.bialgebra;
        data.H = b.H.bialgebra;
        data.action = b.action;
        (b.side == Side::right ? data.coaction_A : data.coaction_H) = b.coaction;
        require_pass(check_condition_set(b.side == Side::right ? ConditionSet::bicross_right
                                                               : ConditionSet::bicross_left,
                                         data, options.check),
                     "induced copair");
    }
    const auto da = b.A.dim(), dh = b.H.dim();
    const Tensor al = b.A.beta(), be = b.H.beta();
    const Tensor& act = b.action.tensor;
    const Tensor& co = b.coaction.tensor;
    if (b.side == Side::right) {
        HomHopfAlgebra Ad = dual_hopf(b.A);
        const Tensor I = Tensor::identity(da);
        Tensor r1 = (Net::input("h", dh) * Net::constant(I, {"s", "x"}))
                        .map("h", mat_power(be, -2))
                        .map("x", mat_power(al, -1))
                        .apply(act, {"h", "x"}, {"o"})
                        .collect({"@h", "s", "o"});
        Tensor r2 = (Net::input("p", da) * Net::constant(I, {"s", "x"}))
                        .apply(co, {"x"}, {"l", "z"})
                        .map("z", mat_power(al, 2))
                        .pair("p", "z")
                        .map("l", be)
                        .collect({"@p", "s", "l"});
        return MatchedCopair{b.H, Ad, CoactionMap{Side::left, Ad.label(), b.H.label(), be, r1},
                             CoactionMap{Side::right, b.H.label(), Ad.label(), Ad.beta(), r2}};
    }
    HomHopfAlgebra Hd = dual_hopf(b.H);
    const Tensor I = Tensor::identity(dh);
    Tensor r3 = (Net::input("a", da) * Net::constant(I, {"x", "s"}))
                    .map("x", mat_power(be, -1))
                    .map("a", mat_power(al, -2))
                    .apply(act, {"x", "a"}, {"o"})
                    .collect({"@a", "o", "s"});
    Tensor r4 = (Net::input("u", dh) * Net::constant(I, {"x", "s"}))
                    .apply(co, {"x"}, {"g", "z"})
                    .map("g", mat_power(be, 2))
                    .pair("u", "g")
                    .map("z", al)
                    .collect({"@u", "z", "s"});
    return MatchedCopair{Hd, b.A, CoactionMap{Side::left, b.A.label(), Hd.label(), Hd.beta(), r4},
                         CoactionMap{Side::right, Hd.label(), b.A.label(), al, r3}};
}

const char* variant_name(CodoubleVariant v) { return v == CodoubleVariant::T ? "T" : "That"; }

HomHopfAlgebra drinfeld_codouble(const HomHopfAlgebra& H, long long n, CodoubleVariant variant) {
    const auto d = H.dim();
    const Tensor& B = H.beta();
    const Tensor Si = mat_inverse(H.antipode);
    auto P = [&](long long k) { return mat_power(B, k); };
    const HomHopfAlgebra Hop = opposite_hopf(H);
    const HomHopfAlgebra Hd = dual_hopf(H);
    const Side side = variant == CodoubleVariant::T ? Side::right : Side::left;
    const MatchedCopair copair = copair_from_bicross(canonical_bicross_data(H, n, side), ProductOptions{true, {}});
    const Net bases = Net::constant(Tensor::identity(d), {"es", "ES"}) * Net::constant(Tensor::identity(d), {"et", "ET"});

    Tensor m, D;
    Carrier carrier;
    if (variant == CodoubleVariant::T) {
        Net n2 = (Net::inputs({{"h", d}, {"u", d}}) * bases)
                     .split("h", H.comult(), "h1", "h2")
                     .split("u", Hd.comult(), "u1", "u2")
                     .map("u1", transpose(P(2)))
                     .join("u1", "es", Hd.mult(), "q")
                     .join("et", "q", Hd.mult(), "X")
                     .map("h2", P(-2))
                     .map("ET", P(n - 1))
                     .join("h2", "ET", H.mult(), "r")
                     .map("ES", matmul(P(n + 1), Si))
                     .join("ES", "r", H.mult(), "Y");
        D = collect_pairs(n2, {"@h", "@u", "h1", "X", "Y", "u2"}, d, d);
        m = componentwise_product(Hop.algebra(), Hd.algebra());
        carrier = composite_carrier(Hop.carrier(), Hd.carrier(), "codouble");
    } else {
        Net n2 = (Net::inputs({{"u", d}, {"h", d}}) * bases)
                     .split("h", H.comult(), "h1", "h2")
                     .split("u", Hd.comult(), "u1", "u2")
                     .map("u2", transpose(P(2)))
                     .join("es", "u2", Hd.mult(), "q")
                     .join("q", "et", Hd.mult(), "Y")
                     .map("ET", P(n - 1))
                     .map("h1", P(-2))
                     .join("ET", "h1", H.mult(), "r")
                     .map("ES", matmul(P(n + 1), Si))
                     .join("r", "ES", H.mult(), "X");
        D = collect_pairs(n2, {"@u", "@h", "u1", "X", "Y", "h2"}, d, d);
        m = componentwise_product(Hd.algebra(), Hop.algebra());
        carrier = composite_carrier(Hd.carrier(), Hop.carrier(), "codouble-hat");
    }
    carrier.provenance.inputs = {H.label()};
    carrier.provenance.n = n;
    carrier.provenance.derived_antipode = true;
    return make_hopf(carrier, m, kron_vector(copair.A.unit(), copair.H.unit()), D,
                     kron_vector(copair.A.counit(), copair.H.counit()), copair_antipode(copair));
}

HomHopfAlgebra codouble_via_copair(const HomHopfAlgebra& H, long long n, CodoubleVariant variant) {
    const Side side = variant == CodoubleVariant::T ? Side::right : Side::left;
    HomHopfAlgebra r = double_crosscoproduct(copair_from_bicross(canonical_bicross_data(H, n, side)));
    Provenance p = r.carrier().provenance;
    p.inputs = {H.label()};
    p.n = n;
    set_provenance(r, p);
    return r;
}

}  // namespace hombox
