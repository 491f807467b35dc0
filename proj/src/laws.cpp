#include "hombox/laws.hpp"

#include <optional>

namespace hombox {

namespace {

std::optional<Tensor> inverse_of(const Tensor& m) {
    try {
        return mat_inverse(m);
    } catch (const Singular&) {
        return std::nullopt;
    }
}

const char* kNoInverse = "automorphism is not invertible";

void algebra_laws(LawRecorder& r, const HomAlgebra& A) {
    const auto d = A.dim();
    const Tensor& m = A.mult;
    const Tensor& B = A.beta();
    const Net one = Net::constant(A.unit, {"1"});

    const Net abc = Net::inputs({{"a", d}, {"b", d}, {"c", d}});
    r.compare("algebra.hom-associativity", "α(a)(bc) = (ab)α(c)",
              abc.map("a", B).join("b", "c", m, "bc").join("a", "bc", m, "r"),
              abc.join("a", "b", m, "ab").map("c", B).join("ab", "c", m, "r"), {"@a", "@b", "@c", "r"}, 3);

    const Net a = Net::input("a", d);
    r.compare("algebra.unit-right", "a1 = α(a)", (a * one).join("a", "1", m, "r"), a.map("a", B, "r"), {"@a", "r"},
              1);
    r.compare("algebra.unit-left", "1a = α(a)", (a * one).join("1", "a", m, "r"), a.map("a", B, "r"), {"@a", "r"}, 1);

    const Net ab = Net::inputs({{"a", d}, {"b", d}});
    r.compare("algebra.automorphism-multiplicative", "α(ab) = α(a)α(b)", ab.join("a", "b", m, "r").map("r", B),
              ab.map("a", B).map("b", B).join("a", "b", m, "r"), {"@a", "@b", "r"}, 2);
    r.compare("algebra.automorphism-unit", "α(1) = 1", one.map("1", B), one, {"1"}, 0);
    r.record("algebra.automorphism-invertible", "α is bijective", is_invertible(B));
}

void coalgebra_laws(LawRecorder& r, const HomCoalgebra& C) {
    const auto d = C.dim();
    const Tensor& D = C.comult;
    const Tensor& e = C.counit;
    const Tensor& B = C.beta();
    const auto Bi = inverse_of(B);
    const Net c = Net::input("c", d);

    if (Bi) {
        r.compare("coalgebra.hom-coassociativity", "λ⁻¹(c₁) ⊗ Δ(c₂) = Δ(c₁) ⊗ λ⁻¹(c₂)",
                  c.split("c", D, "c1", "c2").map("c1", *Bi, "x").split("c2", D, "y", "z"),
                  c.split("c", D, "c1", "c2").split("c1", D, "x", "y").map("c2", *Bi, "z"), {"@c", "x", "y", "z"},
                  1);
        r.compare("coalgebra.counit-right", "c₁ε(c₂) = λ⁻¹(c)", c.split("c", D, "r", "c2").eval("c2", e),
                  c.map("c", *Bi, "r"), {"@c", "r"}, 1);
        r.compare("coalgebra.counit-left", "ε(c₁)c₂ = λ⁻¹(c)", c.split("c", D, "c1", "r").eval("c1", e),
                  c.map("c", *Bi, "r"), {"@c", "r"}, 1);
    } else {
        r.record("coalgebra.hom-coassociativity", "λ⁻¹(c₁) ⊗ Δ(c₂) = Δ(c₁) ⊗ λ⁻¹(c₂)", false, kNoInverse);
        r.record("coalgebra.counit-right", "c₁ε(c₂) = λ⁻¹(c)", false, kNoInverse);
        r.record("coalgebra.counit-left", "ε(c₁)c₂ = λ⁻¹(c)", false, kNoInverse);
    }
    r.compare("coalgebra.automorphism-comultiplicative", "Δ(λ(c)) = λ(c₁) ⊗ λ(c₂)",
              c.map("c", B).split("c", D, "x", "y"), c.split("c", D, "x", "y").map("x", B).map("y", B),
              {"@c", "x", "y"}, 1);
    r.compare("coalgebra.counit-automorphism", "ε(λ(c)) = ε(c)", c.map("c", B).eval("c", e), c.eval("c", e), {"@c"},
              1);
    r.record("coalgebra.automorphism-invertible", "λ is bijective", Bi.has_value());
}

void bialgebra_laws(LawRecorder& r, const HomBialgebra& H) {
    const auto d = H.dim();
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor& e = H.counit();
    const Net one = Net::constant(H.unit(), {"1"});
    const Net hk = Net::inputs({{"h", d}, {"k", d}});

    r.compare("bialgebra.comult-multiplicative", "Δ(hk) = Δ(h)Δ(k)",
              hk.join("h", "k", m, "p").split("p", D, "x", "y"),
              hk.split("h", D, "h1", "h2")
                  .split("k", D, "k1", "k2")
                  .join("h1", "k1", m, "x")
                  .join("h2", "k2", m, "y"),
              {"@h", "@k", "x", "y"}, 2);
    r.compare("bialgebra.comult-unit", "Δ(1) = 1 ⊗ 1", one.split("1", D, "x", "y"),
              Net::constant(H.unit(), {"x"}) * Net::constant(H.unit(), {"y"}), {"x", "y"}, 0);
    r.compare("bialgebra.counit-multiplicative", "ε(hk) = ε(h)ε(k)", hk.join("h", "k", m, "p").eval("p", e),
              hk.eval("h", e).eval("k", e), {"@h", "@k"}, 2);
    r.compare("bialgebra.counit-unit", "ε(1) = 1", one.eval("1", e), Net::scalar(1), {}, 0);
}

void antipode_laws(LawRecorder& r, const HomHopfAlgebra& H) {
    const auto d = H.dim();
    const Tensor& m = H.mult();
    const Tensor& D = H.comult();
    const Tensor& S = H.antipode;
    const Net h = Net::input("h", d);
    const Net eps_one = h.eval("h", H.counit()) * Net::constant(H.unit(), {"r"});

    r.compare("hopf.antipode-left", "S(h₁)h₂ = ε(h)1", h.split("h", D, "h1", "h2").map("h1", S).join("h1", "h2", m, "r"),
              eps_one, {"@h", "r"}, 1);
    r.compare("hopf.antipode-right", "h₁S(h₂) = ε(h)1",
              h.split("h", D, "h1", "h2").map("h2", S).join("h1", "h2", m, "r"), eps_one, {"@h", "r"}, 1);
    r.compare("hopf.antipode-automorphism", "β∘S = S∘β", transpose(matmul(H.beta(), S)),
              transpose(matmul(S, H.beta())), 1);
}

void require_level(bool ok, const std::string& what) {
    if (!ok) throw MissingStructure(what);
}

}  // namespace

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::algebra: return "algebra";
        case Suite::coalgebra: return "coalgebra";
        case Suite::bialgebra: return "bialgebra";
        case Suite::hopf: return "hopf";
    }
    return "?";
}

Suite parse_suite(const std::string& name) {
    for (Suite s : {Suite::algebra, Suite::coalgebra, Suite::bialgebra, Suite::hopf})
        if (name == suite_name(s)) return s;
    throw BadParam("unknown suite " + name);
}

CheckReport check_structure(const HomAlgebra& a, Suite suite, CheckOptions options) {
    validate(a);
    require_level(suite == Suite::algebra, std::string("an algebra has no ") + suite_name(suite) + " structure");
    LawRecorder r("algebra", options);
    algebra_laws(r, a);
    return r.take();
}

CheckReport check_structure(const HomCoalgebra& c, Suite suite, CheckOptions options) {
    validate(c);
    require_level(suite == Suite::coalgebra, std::string("a coalgebra has no ") + suite_name(suite) + " structure");
    LawRecorder r("coalgebra", options);
    coalgebra_laws(r, c);
    return r.take();
}

CheckReport check_structure(const HomBialgebra& b, Suite suite, CheckOptions options) {
    validate(b);
    require_level(suite != Suite::hopf, "a bialgebra has no antipode");
    LawRecorder r(suite_name(suite), options);
    if (suite != Suite::coalgebra) algebra_laws(r, b.algebra);
    if (suite != Suite::algebra) coalgebra_laws(r, b.coalgebra);
    if (suite == Suite::bialgebra) bialgebra_laws(r, b);
    return r.take();
}

CheckReport check_structure(const HomHopfAlgebra& h, Suite suite, CheckOptions options) {
    validate(h);
    if (suite != Suite::hopf) return check_structure(h.bialgebra, suite, options);
    LawRecorder r("hopf", options);
    algebra_laws(r, h.algebra());
    coalgebra_laws(r, h.coalgebra());
    bialgebra_laws(r, h.bialgebra);
    antipode_laws(r, h);
    return r.take();
}

namespace {

void expect(bool ok, const std::string& what) {
    if (!ok) throw DimMismatch(what);
}

}  // namespace

CheckReport check_action_laws(const ActionMap& act, const HomBialgebra& actor, const HomAlgebra& carrier,
                              ActionLevel level, Side side, CheckOptions options) {
    if (act.side != side)
        throw SideMismatch(std::string("a ") + side_name(act.side) + " action checked against " + side_name(side) +
                           " module laws");
    const auto da = actor.dim(), dm = carrier.dim();
    const Shape want = side == Side::right ? Shape{dm, da, dm} : Shape{da, dm, dm};
    expect(act.tensor.shape() == want, "action tensor shape does not match actor and carrier dimensions");
    expect(act.carrier_beta.shape() == Shape({dm, dm}), "carrier automorphism has the wrong size");

    const Tensor& T = act.tensor;
    const Tensor& mu = act.carrier_beta;
    const Tensor& al = actor.beta();
    const Tensor& mA = actor.mult();
    const Tensor& mM = carrier.mult;
    auto acting = [&](const Net& n, const std::string& m, const std::string& a, const std::string& out) {
        return side == Side::right ? n.apply(T, {m, a}, {out}) : n.apply(T, {a, m}, {out});
    };

    LawRecorder r(std::string(side_name(side)) + "-" + (level == ActionLevel::module ? "module" : "module-algebra"),
                  options);
    r.record("module.carrier-automorphism", "the action's carrier automorphism is the carrier's", mu == carrier.beta());

    const Net one = Net::constant(actor.unit(), {"1"});
    if (side == Side::right) {
        const Net mab = Net::inputs({{"m", dm}, {"a", da}, {"b", da}});
        r.compare("module.hom-associativity", "(m◁a)◁α(b) = μ(m)◁(ab)",
                  acting(acting(mab, "m", "a", "p").map("b", al), "p", "b", "r"),
                  acting(mab.map("m", mu).join("a", "b", mA, "ab"), "m", "ab", "r"), {"@m", "@a", "@b", "r"}, 3);
        const Net m = Net::input("m", dm);
        r.compare("module.unit", "m◁1 = μ(m)", acting(m * one, "m", "1", "r"), m.map("m", mu, "r"), {"@m", "r"}, 1);
        const Net ma = Net::inputs({{"m", dm}, {"a", da}});
        r.compare("module.automorphism", "μ(m◁a) = μ(m)◁α(a)", acting(ma, "m", "a", "r").map("r", mu),
                  acting(ma.map("m", mu).map("a", al), "m", "a", "r"), {"@m", "@a", "r"}, 2);
    } else {
        const Net abm = Net::inputs({{"a", da}, {"b", da}, {"m", dm}});
        r.compare("module.hom-associativity", "α(a)▷(b▷m) = (ab)▷μ(m)",
                  acting(acting(abm, "m", "b", "p").map("a", al), "p", "a", "r"),
                  acting(abm.join("a", "b", mA, "ab").map("m", mu), "m", "ab", "r"), {"@a", "@b", "@m", "r"}, 3);
        const Net m = Net::input("m", dm);
        r.compare("module.unit", "1▷m = μ(m)", acting(m * one, "m", "1", "r"), m.map("m", mu, "r"), {"@m", "r"}, 1);
        const Net am = Net::inputs({{"a", da}, {"m", dm}});
        r.compare("module.automorphism", "μ(a▷m) = α(a)▷μ(m)", acting(am, "m", "a", "r").map("r", mu),
                  acting(am.map("m", mu).map("a", al), "m", "a", "r"), {"@a", "@m", "r"}, 2);
    }
    if (level == ActionLevel::module_algebra) {
        const Tensor& D = actor.comult();
        const Net unit_m = Net::constant(carrier.unit, {"u"});
        if (side == Side::right) {
            const Net hga = Net::inputs({{"h", dm}, {"g", dm}, {"a", da}});
            r.compare("module-algebra.multiplicative", "(hg)◁a = (h◁a₁)(g◁a₂)",
                      acting(hga.join("h", "g", mM, "p"), "p", "a", "r"),
                      acting(acting(hga.split("a", D, "a1", "a2"), "h", "a1", "x"), "g", "a2", "y")
                          .join("x", "y", mM, "r"),
                      {"@h", "@g", "@a", "r"}, 3);
            const Net a = Net::input("a", da);
            r.compare("module-algebra.unit", "1◁a = ε(a)1", acting(a * unit_m, "u", "a", "r"),
                      a.eval("a", actor.counit()) * Net::constant(carrier.unit, {"r"}), {"@a", "r"}, 1);
        } else {
            const Net hab = Net::inputs({{"h", da}, {"a", dm}, {"b", dm}});
            r.compare("module-algebra.multiplicative", "h▷(ab) = (h₁▷a)(h₂▷b)",
                      acting(hab.join("a", "b", mM, "p"), "p", "h", "r"),
                      acting(acting(hab.split("h", D, "h1", "h2"), "a", "h1", "x"), "b", "h2", "y")
                          .join("x", "y", mM, "r"),
                      {"@h", "@a", "@b", "r"}, 3);
            const Net h = Net::input("h", da);
            r.compare("module-algebra.unit", "h▷1 = ε(h)1", acting(h * unit_m, "u", "h", "r"),
                      h.eval("h", actor.counit()) * Net::constant(carrier.unit, {"r"}), {"@h", "r"}, 1);
        }
    }
    return r.take();
}

namespace {

struct CarrierView {
    std::size_t dim;
    const Tensor& beta;
    const Tensor* mult = nullptr;
    const Tensor* unit = nullptr;
    const Tensor* comult = nullptr;
    const Tensor* counit = nullptr;
};

CheckReport coaction_laws(const CoactionMap& coact, const HomBialgebra& C, const CarrierView& M, CoactionLevel level,
                          Side side, CheckOptions options) {
    if (coact.side != side)
        throw SideMismatch(std::string("a ") + side_name(coact.side) + " coaction checked against " +
                           side_name(side) + " comodule laws");
    const auto dc = C.dim(), dm = M.dim;
    const Shape want = side == Side::left ? Shape{dm, dc, dm} : Shape{dm, dm, dc};
    expect(coact.tensor.shape() == want, "coaction tensor shape does not match coactor and carrier dimensions");
    expect(coact.carrier_beta.shape() == Shape({dm, dm}), "carrier automorphism has the wrong size");
    if (level == CoactionLevel::comodule_algebra) require_level(M.mult != nullptr, "carrier multiplication");
    if (level == CoactionLevel::comodule_coalgebra) require_level(M.comult != nullptr, "carrier comultiplication");

    const Tensor& T = coact.tensor;
    const Tensor& mu = coact.carrier_beta;
    const Tensor& la = C.beta();
    const auto mui = inverse_of(mu);
    const auto lai = inverse_of(la);
    // Splits leg into its coactor part c and carrier part m.
    auto co = [&](const Net& n, const std::string& leg, const std::string& c, const std::string& m) {
        return side == Side::left ? n.apply(T, {leg}, {c, m}) : n.apply(T, {leg}, {m, c});
    };

    const char* level_name = level == CoactionLevel::comodule           ? "comodule"
                             : level == CoactionLevel::comodule_algebra ? "comodule-algebra"
                                                                        : "comodule-coalgebra";
    LawRecorder r(std::string(side_name(side)) + "-" + level_name, options);
    r.record("comodule.carrier-automorphism", "the coaction's carrier automorphism is the carrier's", mu == M.beta);

    const Net m = Net::input("m", dm);
    const bool left = side == Side::left;
    const std::string coassoc = left ? "Δ(m[-1]) ⊗ μ⁻¹(m[0]) = λ⁻¹(m[-1]) ⊗ m[0][-1] ⊗ m[0][0]"
                                     : "μ⁻¹(m(0)) ⊗ Δ(m(1)) = m(0)(0) ⊗ m(0)(1) ⊗ λ⁻¹(m(1))";
    const std::string counit = left ? "ε(m[-1])m[0] = μ⁻¹(m)" : "m(0)ε(m(1)) = μ⁻¹(m)";
    if (mui && lai) {
        if (left)
            r.compare("comodule.coassociativity", coassoc,
                      co(m, "m", "c", "n").split("c", C.comult(), "x", "y").map("n", *mui, "z"),
                      co(co(m, "m", "c", "n").map("c", *lai, "x"), "n", "y", "z"), {"@m", "x", "y", "z"}, 1);
        else
            r.compare("comodule.coassociativity", coassoc,
                      co(m, "m", "c", "n").map("n", *mui, "x").split("c", C.comult(), "y", "z"),
                      co(co(m, "m", "c", "n"), "n", "y", "x").map("c", *lai, "z"), {"@m", "x", "y", "z"}, 1);
        r.compare("comodule.counit", counit, co(m, "m", "c", "r").eval("c", C.counit()), m.map("m", *mui, "r"),
                  {"@m", "r"}, 1);
    } else {
        r.record("comodule.coassociativity", coassoc, false, kNoInverse);
        r.record("comodule.counit", counit, false, kNoInverse);
    }
    r.compare("comodule.automorphism", left ? "ρ(μ(m)) = λ(m[-1]) ⊗ μ(m[0])" : "ρ(μ(m)) = μ(m(0)) ⊗ λ(m(1))",
              co(m.map("m", mu), "m", "c", "n"), co(m, "m", "c", "n").map("c", la).map("n", mu), {"@m", "c", "n"}, 1);

    if (level == CoactionLevel::comodule_algebra) {
        const Tensor& mM = *M.mult;
        const Net cd = Net::inputs({{"c", dm}, {"d", dm}});
        r.compare("comodule-algebra.multiplicative",
                  left ? "ρ(cd) = c[-1]d[-1] ⊗ c[0]d[0]" : "ρ(cd) = c(0)d(0) ⊗ c(1)d(1)",
                  co(cd.join("c", "d", mM, "p"), "p", "x", "y"),
                  co(co(cd, "c", "c1", "c0"), "d", "d1", "d0")
                      .join("c1", "d1", C.mult(), "x")
                      .join("c0", "d0", mM, "y"),
                  {"@c", "@d", "x", "y"}, 2);
        const Net one = Net::constant(*M.unit, {"u"});
        r.compare("comodule-algebra.unit", "ρ(1) = 1 ⊗ 1", co(one, "u", "x", "y"),
                  Net::constant(C.unit(), {"x"}) * Net::constant(*M.unit, {"y"}), {"x", "y"}, 0);
    }
    if (level == CoactionLevel::comodule_coalgebra) {
        const Tensor& DM = *M.comult;
        const Net c = Net::input("c", dm);
        if (left)
            r.compare("comodule-coalgebra.comultiplicative", "c[-1] ⊗ Δ(c[0]) = c₁[-1]c₂[-1] ⊗ c₁[0] ⊗ c₂[0]",
                      co(c, "c", "x", "n").split("n", DM, "y", "z"),
                      co(co(c.split("c", DM, "c1", "c2"), "c1", "p", "y"), "c2", "q", "z")
                          .join("p", "q", C.mult(), "x"),
                      {"@c", "x", "y", "z"}, 1);
        else
            r.compare("comodule-coalgebra.comultiplicative", "Δ(c(0)) ⊗ c(1) = c₁(0) ⊗ c₂(0) ⊗ c₁(1)c₂(1)",
                      co(c, "c", "z", "n").split("n", DM, "x", "y"),
                      co(co(c.split("c", DM, "c1", "c2"), "c1", "p", "x"), "c2", "q", "y")
                          .join("p", "q", C.mult(), "z"),
                      {"@c", "x", "y", "z"}, 1);
        r.compare("comodule-coalgebra.counit", left ? "c[-1]ε(c[0]) = ε(c)1" : "ε(c(0))c(1) = ε(c)1",
                  co(c, "c", "x", "n").eval("n", *M.counit),
                  c.eval("c", *M.counit) * Net::constant(C.unit(), {"x"}), {"@c", "x"}, 1);
    }
    return r.take();
}

}  // namespace

CheckReport check_coaction_laws(const CoactionMap& coact, const HomBialgebra& coactor, const HomAlgebra& carrier,
                                CoactionLevel level, Side side, CheckOptions options) {
    CarrierView v{carrier.dim(), carrier.beta(), &carrier.mult, &carrier.unit};
    return coaction_laws(coact, coactor, v, level, side, options);
}

CheckReport check_coaction_laws(const CoactionMap& coact, const HomBialgebra& coactor, const HomCoalgebra& carrier,
                                CoactionLevel level, Side side, CheckOptions options) {
    CarrierView v{carrier.dim(), carrier.beta(), nullptr, nullptr, &carrier.comult, &carrier.counit};
    return coaction_laws(coact, coactor, v, level, side, options);
}

}  // namespace hombox
