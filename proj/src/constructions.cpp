#include "hombox/constructions.hpp"

#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/net.hpp"

namespace hombox {

namespace {

std::vector<std::string> dual_basis(const std::vector<std::string>& basis) {
    std::vector<std::string> r;
    for (const auto& b : basis) r.push_back(b + "*");
    return r;
}

Carrier dual_carrier(const Carrier& c) {
    Carrier d = make_carrier(dual_label(c.label), dual_basis(c.basis), transpose(mat_inverse(c.beta)));
    d.provenance.construction = "dual";
    d.provenance.inputs = {c.label};
    return d;
}

}  // namespace

HomBialgebra dual_bialgebra(const HomBialgebra& H) {
    Carrier c = dual_carrier(H.carrier());
    // mult*[s,t,r] = Δ[r,s,t] and Δ*[r,s,t] = m[s,t,r]
    return make_bialgebra(std::move(c), permute(H.comult(), {1, 2, 0}), H.counit(), permute(H.mult(), {2, 0, 1}),
                          H.unit());
}

HomHopfAlgebra dual_hopf(const HomHopfAlgebra& H) {
    HomBialgebra b = dual_bialgebra(H.bialgebra);
    HomHopfAlgebra r{b, transpose(H.antipode).relabeled({b.label(), b.label()})};
    validate(r);
    return r;
}

HomBialgebra opposite(const HomBialgebra& H) {
    Carrier c = H.carrier();
    c.label = H.label() + "^op";
    c.beta = c.beta.relabeled({c.label, c.label});
    c.provenance = Provenance{};
    c.provenance.construction = "op";
    c.provenance.inputs = {H.label()};
    return make_bialgebra(std::move(c), permute(H.mult(), {1, 0, 2}), H.unit(), H.comult(), H.counit());
}

Opposite opposite(const HomHopfAlgebra& H, bool derive_antipode) {
    Opposite o{opposite(H.bialgebra), std::nullopt};
    if (derive_antipode) {
        o.antipode = mat_inverse(H.antipode).relabeled({o.bialgebra.label(), o.bialgebra.label()});
        Provenance p = o.bialgebra.carrier().provenance;
        p.derived_antipode = true;
        set_provenance(o.bialgebra, p);
    }
    return o;
}

HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& H) {
    Opposite o = opposite(H, true);
    return HomHopfAlgebra{std::move(o.bialgebra), std::move(*o.antipode)};
}

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const Tensor& a) {
    const auto d = classical.dim();
    if (classical.beta() != Tensor::identity(d)) throw BadParam("the input to a Yau twist must have β = id");
    if (a.shape() != Shape{d, d}) throw DimMismatch("automorphism has the wrong shape");
    if (!is_invertible(a)) throw NotAutomorphism("automorphism is not invertible");

    const Tensor& m = classical.mult();
    const Tensor& D = classical.comult();
    const Net xy = Net::inputs({{"x", d}, {"y", d}});
    const Net x = Net::input("x", d);
    auto same = [](const Net& l, const Net& r, const std::vector<std::string>& order) {
        return l.collect(order) == r.collect(order);
    };
    if (!same(xy.join("x", "y", m, "r").map("r", a), xy.map("x", a).map("y", a).join("x", "y", m, "r"),
              {"@x", "@y", "r"}))
        throw NotAutomorphism("α(xy) = α(x)α(y) fails");
    if (apply(a, classical.unit()) != classical.unit()) throw NotAutomorphism("α(1) = 1 fails");
    if (!same(x.map("x", a).split("x", D, "l", "r"), x.split("x", D, "l", "r").map("l", a).map("r", a),
              {"@x", "l", "r"}))
        throw NotAutomorphism("Δ(α(x)) = α(x₁) ⊗ α(x₂) fails");
    if (apply(transpose(a), classical.counit()) != classical.counit()) throw NotAutomorphism("ε∘α = ε fails");
    if (matmul(a, classical.antipode) != matmul(classical.antipode, a)) throw NotAutomorphism("α∘S = S∘α fails");

    const Tensor ai = mat_inverse(a);
    const Net in = Net::inputs({{"x", d}, {"y", d}});
    Tensor mult = in.join("x", "y", m, "r").map("r", a).collect({"@x", "@y", "r"});
    Tensor comult = x.map("x", ai).split("x", D, "l", "r").collect({"@x", "l", "r"});
    Carrier c = make_carrier(classical.label(), classical.carrier().basis, a);
    c.provenance = classical.carrier().provenance;
    HomHopfAlgebra r = make_hopf(std::move(c), mult, classical.unit(), comult, classical.counit(), classical.antipode);
    return r;
}

ActionMap regular_action_left(const HomHopfAlgebra& H, long long i) {
    const auto d = H.dim();
    const Tensor& B = H.beta();
    // T[h,u,o] = u(β⁻²(e_o) β^i(e_h))
    Tensor t = Net::inputs({{"h", d}, {"o", d}})
                   .map("o", mat_power(B, -2))
                   .map("h", mat_power(B, i))
                   .join("o", "h", H.mult(), "u")
                   .collect({"@h", "u", "@o"});
    const std::string star = dual_label(H.label());
    return ActionMap{Side::left, H.label(), star, transpose(mat_inverse(B)).relabeled({star, star}),
                     t.relabeled({H.label(), star, star})};
}

ActionMap regular_action_right(const HomHopfAlgebra& H, long long j) {
    const auto d = H.dim();
    const Tensor& B = H.beta();
    // T[u,h,o] = u(β^j(e_h) β⁻²(e_o))
    Tensor t = Net::inputs({{"h", d}, {"o", d}})
                   .map("h", mat_power(B, j))
                   .map("o", mat_power(B, -2))
                   .join("h", "o", H.mult(), "u")
                   .collect({"u", "@h", "@o"});
    const std::string star = dual_label(H.label());
    return ActionMap{Side::right, H.label(), star, transpose(mat_inverse(B)).relabeled({star, star}),
                     t.relabeled({star, H.label(), star})};
}

Tensor convolve(const Tensor& u, const Tensor& v, const HomHopfAlgebra& H) {
    const auto d = H.dim();
    if (u.shape() != Shape{d} || v.shape() != Shape{d}) throw DimMismatch("convolution of covectors of the wrong size");
    return Net::input("h", d)
        .split("h", H.comult(), "l", "r")
        .eval("l", u)
        .eval("r", v)
        .collect({"@h"})
        .relabeled({dual_label(H.label())});
}

}  // namespace hombox
