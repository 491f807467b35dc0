#include "hombox/conditions.hpp"

#include "hombox/braiding.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/net.hpp"

namespace hombox {

const char* condition_set_name(ConditionSet s) {
    switch (s) {
        case ConditionSet::bicross_right: return "bicross-right";
        case ConditionSet::bicross_left: return "bicross-left";
        case ConditionSet::matched_copair: return "matched-copair";
        case ConditionSet::cqt: return "cqt";
        case ConditionSet::cocycle_left: return "cocycle-left";
        case ConditionSet::cocycle_right: return "cocycle-right";
    }
    return "?";
}

ConditionSet parse_condition_set(const std::string& name) {
    for (auto s : {ConditionSet::bicross_right, ConditionSet::bicross_left, ConditionSet::matched_copair,
                   ConditionSet::cqt, ConditionSet::cocycle_left, ConditionSet::cocycle_right})
        if (name == condition_set_name(s)) return s;
    throw BadParam("unknown condition set " + name);
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* what, ConditionSet s) {
    if (!v) throw MissingStructure(std::string(condition_set_name(s)) + " conditions need " + what);
    return *v;
}

void bicross_right_conditions(LawRecorder& r, const HomBialgebra& A, const HomBialgebra& H, const ActionMap& act,
                              const CoactionMap& coact, CheckOptions options) {
    r.merge(check_action_laws(act, A, H.algebra, ActionLevel::module_algebra, Side::right, options), "action.");
    r.merge(check_coaction_laws(coact, H, A.coalgebra, CoactionLevel::comodule_coalgebra, Side::left, options),
            "coaction.");
    const auto da = A.dim(), dh = H.dim();
    const Tensor& T = act.tensor;
    const Tensor& P = coact.tensor;
    const Tensor al = A.beta(), ali = mat_inverse(al), be = H.beta(), bei = mat_inverse(be);
    auto on = [&](const Net& n, const std::string& h, const std::string& a, const std::string& out) {
        return n.apply(T, {h, a}, {out});
    };
    auto co = [&](const Net& n, const std::string& a, const std::string& c, const std::string& m) {
        return n.apply(P, {a}, {c, m});
    };

    const Net ha = Net::inputs({{"h", dh}, {"a", da}});
    r.compare("bicross-right.action-comultiplicative",
              "Δ(h◁a) = (β⁻¹(h₁)◁α⁻¹(a₁))β(a₂[-1]) ⊗ h₂◁α(a₂[0])",
              on(ha, "h", "a", "o").split("o", H.comult(), "x", "y"),
              on(on(co(ha.split("h", H.comult(), "h1", "h2").split("a", A.comult(), "a1", "a2").map("h1", bei).map(
                              "a1", ali),
                       "a2", "am", "a0"),
                    "h1", "a1", "p")
                     .map("am", be)
                     .join("p", "am", H.mult(), "x")
                     .map("a0", al),
                 "h2", "a0", "y"),
              {"@h", "@a", "x", "y"}, 2);
    r.compare("bicross-right.action-counital", "ε(h◁a) = ε(h)ε(a)", on(ha, "h", "a", "o").eval("o", H.counit()),
              ha.eval("h", H.counit()).eval("a", A.counit()), {"@h", "@a"}, 2);

    const Net ab = Net::inputs({{"a", da}, {"b", da}});
    r.compare("bicross-right.coaction-multiplicative",
              "(ab)[-1] ⊗ (ab)[0] = (β⁻¹(a[-1])◁α⁻¹(b₁))β(b₂[-1]) ⊗ a[0]α(b₂[0])",
              co(ab.join("a", "b", A.mult(), "p"), "p", "x", "y"),
              co(on(co(ab, "a", "am", "a0").split("b", A.comult(), "b1", "b2").map("am", bei).map("b1", ali), "am",
                    "b1", "p"),
                 "b2", "bm", "b0")
                  .map("bm", be)
                  .join("p", "bm", H.mult(), "x")
                  .map("b0", al)
                  .join("a0", "b0", A.mult(), "y"),
              {"@a", "@b", "x", "y"}, 2);
    r.compare("bicross-right.coaction-unital", "ρ(1) = 1 ⊗ 1", co(Net::constant(A.unit(), {"u"}), "u", "x", "y"),
              Net::constant(H.unit(), {"x"}) * Net::constant(A.unit(), {"y"}), {"x", "y"}, 0);

    const Tensor be2 = mat_power(be, 2);
    const Net split_a = ha.split("a", A.comult(), "a1", "a2");
    r.compare("bicross-right.action-coaction-compatible",
              "(h◁a₁)β²(a₂[-1]) ⊗ a₂[0] = β²(a₁[-1])(h◁a₂) ⊗ a₁[0]",
              on(co(split_a, "a2", "am", "a0"), "h", "a1", "p").map("am", be2).join("p", "am", H.mult(), "x"),
              on(co(split_a, "a1", "am", "a0"), "h", "a2", "p").map("am", be2).join("am", "p", H.mult(), "x"),
              {"@h", "@a", "x", "a0"}, 2);
}

void bicross_left_conditions(LawRecorder& r, const HomBialgebra& A, const HomBialgebra& H, const ActionMap& act,
                             const CoactionMap& coact, CheckOptions options) {
    r.merge(check_action_laws(act, H, A.algebra, ActionLevel::module_algebra, Side::left, options), "action.");
    r.merge(check_coaction_laws(coact, A, H.coalgebra, CoactionLevel::comodule_coalgebra, Side::right, options),
            "coaction.");
    const auto da = A.dim(), dh = H.dim();
    const Tensor& T = act.tensor;
    const Tensor& P = coact.tensor;
    const Tensor al = A.beta(), ali = mat_inverse(al), be = H.beta(), bei = mat_inverse(be);
    const Tensor al2 = mat_power(al, 2);
    auto on = [&](const Net& n, const std::string& h, const std::string& a, const std::string& out) {
        return n.apply(T, {h, a}, {out});
    };
    // h -> h(0) in H, h(1) in A
    auto co = [&](const Net& n, const std::string& h, const std::string& h0, const std::string& h1) {
        return n.apply(P, {h}, {h0, h1});
    };

    const Net ha = Net::inputs({{"h", dh}, {"a", da}});
    r.compare("bicross-left.action-comultiplicative",
              "Δ(h▷a) = β(h₁(0))▷a₁ ⊗ α(h₁(1))(β⁻¹(h₂)▷α⁻¹(a₂))",
              on(ha, "h", "a", "o").split("o", A.comult(), "x", "y"),
              on(on(co(ha.split("h", H.comult(), "h1", "h2"), "h1", "h10", "h11")
                        .split("a", A.comult(), "a1", "a2")
                        .map("h10", be),
                    "h10", "a1", "x")
                     .map("h2", bei)
                     .map("a2", ali),
                 "h2", "a2", "q")
                  .map("h11", al)
                  .join("h11", "q", A.mult(), "y"),
              {"@h", "@a", "x", "y"}, 2);
    r.compare("bicross-left.action-counital", "ε(h▷a) = ε(h)ε(a)", on(ha, "h", "a", "o").eval("o", A.counit()),
              ha.eval("h", H.counit()).eval("a", A.counit()), {"@h", "@a"}, 2);
    r.compare("bicross-left.coaction-unital", "ρ(1) = 1 ⊗ 1", co(Net::constant(H.unit(), {"u"}), "u", "x", "y"),
              Net::constant(H.unit(), {"x"}) * Net::constant(A.unit(), {"y"}), {"x", "y"}, 0);

    const Net split_h = ha.split("h", H.comult(), "h1", "h2");
    r.compare("bicross-left.action-coaction-compatible",
              "h₂(0) ⊗ (h₁▷a)α²(h₂(1)) = h₁(0) ⊗ α²(h₁(1))(h₂▷a)",
              on(co(split_h, "h2", "x", "c"), "h1", "a", "p").map("c", al2).join("p", "c", A.mult(), "y"),
              on(co(split_h, "h1", "x", "c"), "h2", "a", "p").map("c", al2).join("c", "p", A.mult(), "y"),
              {"@h", "@a", "x", "y"}, 2);

    const Net hg = Net::inputs({{"h", dh}, {"g", dh}});
    r.compare("bicross-left.coaction-multiplicative",
              "(hg)(0) ⊗ (hg)(1) = β(h₁(0))g(0) ⊗ α(h₁(1))(β⁻¹(h₂)▷α⁻¹(g(1)))",
              co(hg.join("h", "g", H.mult(), "p"), "p", "x", "y"),
              on(co(co(hg.split("h", H.comult(), "h1", "h2"), "h1", "h10", "h11"), "g", "g0", "g1")
                     .map("h10", be)
                     .join("h10", "g0", H.mult(), "x")
                     .map("h2", bei)
                     .map("g1", ali),
                 "h2", "g1", "q")
                  .map("h11", al)
                  .join("h11", "q", A.mult(), "y"),
              {"@h", "@g", "x", "y"}, 2);
}

void matched_copair_conditions(LawRecorder& r, const HomBialgebra& A, const HomBialgebra& H, const CoactionMap& rA,
                               const CoactionMap& rH, CheckOptions options) {
    r.merge(check_coaction_laws(rA, H, A.algebra, CoactionLevel::comodule_algebra, Side::left, options),
            "coaction-A.");
    r.merge(check_coaction_laws(rH, A, H.algebra, CoactionLevel::comodule_algebra, Side::right, options),
            "coaction-H.");
    const auto da = A.dim(), dh = H.dim();
    const Tensor al = A.beta(), ali = mat_inverse(al), be = H.beta(), bei = mat_inverse(be);
    // a -> a[-1] in H, a[0] in A
    auto ca = [&](const Net& n, const std::string& a, const std::string& m, const std::string& z) {
        return n.apply(rA.tensor, {a}, {m, z});
    };
    // h -> h(0) in H, h(1) in A
    auto ch = [&](const Net& n, const std::string& h, const std::string& z, const std::string& o) {
        return n.apply(rH.tensor, {h}, {z, o});
    };

    const Net a = Net::input("a", da);
    r.compare("matched-copair.left-counit", "a[-1]ε(a[0]) = ε(a)1", ca(a, "a", "x", "z").eval("z", A.counit()),
              a.eval("a", A.counit()) * Net::constant(H.unit(), {"x"}), {"@a", "x"}, 1);
    r.compare("matched-copair.left-comultiplicative",
              "a[-1] ⊗ a[0]₁ ⊗ a[0]₂ = a₁[-1]β(a₂[-1](0)) ⊗ α⁻¹(a₁[0])a₂[-1](1) ⊗ a₂[0]",
              ca(a, "a", "x", "z").split("z", A.comult(), "y", "w"),
              ch(ca(ca(a.split("a", A.comult(), "a1", "a2"), "a1", "m1", "z1"), "a2", "m2", "w"), "m2", "p0", "p1")
                  .map("p0", be)
                  .join("m1", "p0", H.mult(), "x")
                  .map("z1", ali)
                  .join("z1", "p1", A.mult(), "y"),
              {"@a", "x", "y", "w"}, 1);

    const Net h = Net::input("h", dh);
    r.compare("matched-copair.right-counit", "ε(h(0))h(1) = ε(h)1", ch(h, "h", "z", "x").eval("z", H.counit()),
              h.eval("h", H.counit()) * Net::constant(A.unit(), {"x"}), {"@h", "x"}, 1);
    r.compare("matched-copair.right-comultiplicative",
              "h(0)₁ ⊗ h(0)₂ ⊗ h(1) = h₁(0) ⊗ h₁(1)[-1]β⁻¹(h₂(0)) ⊗ α(h₁(1)[0])h₂(1)",
              ch(h, "h", "z", "w").split("z", H.comult(), "x", "y"),
              ca(ch(ch(h.split("h", H.comult(), "h1", "h2"), "h1", "x", "o1"), "h2", "z2", "o2"), "o1", "q", "s")
                  .map("z2", bei)
                  .join("q", "z2", H.mult(), "y")
                  .map("s", al)
                  .join("s", "o2", A.mult(), "w"),
              {"@h", "x", "y", "w"}, 1);

    const Net ha = Net::inputs({{"h", dh}, {"a", da}});
    const Net both = ca(ch(ha, "h", "h0", "h1"), "a", "am", "a0");
    r.compare("matched-copair.coactions-commute", "h(0)a[-1] ⊗ h(1)a[0] = a[-1]h(0) ⊗ a[0]h(1)",
              both.join("h0", "am", H.mult(), "x").join("h1", "a0", A.mult(), "y"),
              both.join("am", "h0", H.mult(), "x").join("a0", "h1", A.mult(), "y"), {"@h", "@a", "x", "y"}, 2);
}

void form_shape(const HomBialgebra& C, const Tensor& z) {
    if (z.shape() != Shape({C.dim(), C.dim()})) throw DimMismatch("bilinear form has the wrong shape");
}

void cqt_conditions(LawRecorder& r, const HomBialgebra& C, const Tensor& Z) {
    form_shape(C, Z);
    const auto d = C.dim();
    const Tensor B = C.beta(), Bi = mat_inverse(B);
    const Tensor& m = C.mult();
    const Tensor& D = C.comult();
    const Net hg = Net::inputs({{"h", d}, {"g", d}});
    r.compare("cqt.beta-invariant", "ζ(β(h), β(g)) = ζ(h, g)", hg.map("h", B).map("g", B).apply(Z, {"h", "g"}, {}),
              hg.apply(Z, {"h", "g"}, {}), {"@h", "@g"}, 2);
    const Net split = hg.split("h", D, "h1", "h2").split("g", D, "g1", "g2");
    r.compare("cqt.braided-commutative", "ζ(h₁, g₁)g₂h₂ = h₁g₁ζ(h₂, g₂)",
              split.apply(Z, {"h1", "g1"}, {}).join("g2", "h2", m, "r"),
              split.join("h1", "g1", m, "r").apply(Z, {"h2", "g2"}, {}), {"@h", "@g", "r"}, 2);
    const Net hgk = Net::inputs({{"h", d}, {"g", d}, {"k", d}});
    r.compare("cqt.left-multiplicative", "ζ(β⁻¹(h), gk) = ζ(h₁, β(g))ζ(h₂, β(k))",
              hgk.map("h", Bi).join("g", "k", m, "p").apply(Z, {"h", "p"}, {}),
              hgk.split("h", D, "h1", "h2").map("g", B).map("k", B).apply(Z, {"h1", "g"}, {}).apply(Z, {"h2", "k"}, {}),
              {"@h", "@g", "@k"}, 3);
    r.compare("cqt.right-multiplicative", "ζ(hg, β⁻¹(k)) = ζ(β(h), k₂)ζ(β(g), k₁)",
              hgk.join("h", "g", m, "p").map("k", Bi).apply(Z, {"p", "k"}, {}),
              hgk.split("k", D, "k1", "k2").map("h", B).map("g", B).apply(Z, {"h", "k2"}, {}).apply(Z, {"g", "k1"}, {}),
              {"@h", "@g", "@k"}, 3);
    try {
        convolution_inverse(BilinearForm{C.label(), Z}, C);
        r.record("cqt.convolution-invertible", "ζ * ζ⁻¹ = ζ⁻¹ * ζ = ε ⊗ ε", true);
    } catch (const NotInvertible& e) {
        r.record("cqt.convolution-invertible", "ζ * ζ⁻¹ = ζ⁻¹ * ζ = ε ⊗ ε", false, e.what());
    }
}

void cocycle_conditions(LawRecorder& r, const HomBialgebra& C, const Tensor& s, Side side) {
    form_shape(C, s);
    const auto d = C.dim();
    const Tensor& B = C.beta();
    const Tensor& m = C.mult();
    const Tensor& D = C.comult();
    const Net hg = Net::inputs({{"h", d}, {"g", d}});
    r.compare("cocycle.beta-invariant", "σ(β(h), β(g)) = σ(h, g)",
              hg.map("h", B).map("g", B).apply(s, {"h", "g"}, {}), hg.apply(s, {"h", "g"}, {}), {"@h", "@g"}, 2);
    const Net hgk = Net::inputs({{"h", d}, {"g", d}, {"k", d}});
    if (side == Side::left) {
        r.compare("cocycle.left-cocycle", "σ(h₁, g₁)σ(h₂g₂, k) = σ(g₁, k₁)σ(h, g₂k₂)",
                  hgk.split("h", D, "h1", "h2")
                      .split("g", D, "g1", "g2")
                      .apply(s, {"h1", "g1"}, {})
                      .join("h2", "g2", m, "p")
                      .apply(s, {"p", "k"}, {}),
                  hgk.split("g", D, "g1", "g2")
                      .split("k", D, "k1", "k2")
                      .apply(s, {"g1", "k1"}, {})
                      .join("g2", "k2", m, "p")
                      .apply(s, {"h", "p"}, {}),
                  {"@h", "@g", "@k"}, 3);
    } else {
        r.compare("cocycle.right-cocycle", "σ(h₁g₁, k)σ(h₂, g₂) = σ(h, g₁k₁)σ(g₂, k₂)",
                  hgk.split("h", D, "h1", "h2")
                      .split("g", D, "g1", "g2")
                      .join("h1", "g1", m, "p")
                      .apply(s, {"p", "k"}, {})
                      .apply(s, {"h2", "g2"}, {}),
                  hgk.split("g", D, "g1", "g2")
                      .split("k", D, "k1", "k2")
                      .join("g1", "k1", m, "p")
                      .apply(s, {"h", "p"}, {})
                      .apply(s, {"g2", "k2"}, {}),
                  {"@h", "@g", "@k"}, 3);
    }
    const Net h = Net::input("h", d);
    const Net one = Net::constant(C.unit(), {"1"});
    r.compare("cocycle.normal-left", "σ(1, h) = ε(h)", (h * one).apply(s, {"1", "h"}, {}), h.eval("h", C.counit()),
              {"@h"}, 1);
    r.compare("cocycle.normal-right", "σ(h, 1) = ε(h)", (h * one).apply(s, {"h", "1"}, {}), h.eval("h", C.counit()),
              {"@h"}, 1);
}

}  // namespace

CheckReport check_condition_set(ConditionSet set, const ConditionData& data, CheckOptions options) {
    LawRecorder r(condition_set_name(set), options);
    switch (set) {
        case ConditionSet::bicross_right:
            bicross_right_conditions(r, need(data.A, "A", set), need(data.H, "H", set),
                                     need(data.action, "the action", set), need(data.coaction_A, "the coaction", set),
                                     options);
            break;
        case ConditionSet::bicross_left:
            bicross_left_conditions(r, need(data.A, "A", set), need(data.H, "H", set),
                                    need(data.action, "the action", set), need(data.coaction_H, "the coaction", set),
                                    options);
            break;
        case ConditionSet::matched_copair:
            matched_copair_conditions(r, need(data.A, "A", set), need(data.H, "H", set),
                                      need(data.coaction_A, "the coaction on A", set),
                                      need(data.coaction_H, "the coaction on H", set), options);
            break;
        case ConditionSet::cqt:
            cqt_conditions(r, need(data.C, "the coquasitriangular candidate", set), need(data.form, "the form", set));
            break;
        case ConditionSet::cocycle_left:
        case ConditionSet::cocycle_right:
            cocycle_conditions(r, need(data.C, "the object", set), need(data.form, "the form", set),
                               set == ConditionSet::cocycle_left ? Side::left : Side::right);
            break;
    }
    return r.take();
}

}  // namespace hombox
