#include "doctest.h"
#include "hombox/conditions.hpp"
#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/products.hpp"
#include "zoo.hpp"

using namespace hombox;

namespace {

ActionMap trivial_right_action(const HomHopfAlgebra& A, const HomHopfAlgebra& H) {
    // h ◁ a = ε(a)β(h)
    Tensor t({H.dim(), A.dim(), H.dim()});
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t a = 0; a < A.dim(); ++a)
            for (std::size_t o = 0; o < H.dim(); ++o) t(h, a, o) = A.counit()[a] * H.beta()(o, h);
    return ActionMap{Side::right, A.label(), H.label(), H.beta(), t};
}

CoactionMap trivial_left_coaction(const HomHopfAlgebra& A, const HomHopfAlgebra& H) {
    // ρ(a) = 1 ⊗ α⁻¹(a)
    Tensor t({A.dim(), H.dim(), A.dim()});
    const Tensor ai = mat_inverse(A.beta());
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t l = 0; l < H.dim(); ++l)
            for (std::size_t o = 0; o < A.dim(); ++o) t(a, l, o) = H.unit()[l] * ai(o, a);
    return CoactionMap{Side::left, H.label(), A.label(), A.beta(), t};
}

ActionMap trivial_left_action(const HomHopfAlgebra& A, const HomHopfAlgebra& H) {
    Tensor t({H.dim(), A.dim(), A.dim()});
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t a = 0; a < A.dim(); ++a)
            for (std::size_t o = 0; o < A.dim(); ++o) t(h, a, o) = H.counit()[h] * A.beta()(o, a);
    return ActionMap{Side::left, H.label(), A.label(), A.beta(), t};
}

CoactionMap trivial_right_coaction(const HomHopfAlgebra& A, const HomHopfAlgebra& H) {
    Tensor t({H.dim(), H.dim(), A.dim()});
    const Tensor bi = mat_inverse(H.beta());
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t o = 0; o < H.dim(); ++o)
            for (std::size_t a = 0; a < A.dim(); ++a) t(h, o, a) = A.unit()[a] * bi(o, h);
    return CoactionMap{Side::right, A.label(), H.label(), H.beta(), t};
}

void same_structure(const HomHopfAlgebra& x, const HomHopfAlgebra& y) {
    CHECK(x.mult() == y.mult());
    CHECK(x.unit() == y.unit());
    CHECK(x.comult() == y.comult());
    CHECK(x.counit() == y.counit());
    CHECK(x.antipode == y.antipode);
    CHECK(x.beta() == y.beta());
}

}  // namespace

TEST_SUITE("products") {

TEST_CASE("canonical bicrossproducts pass the hopf suite on every builtin") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1})
            for (Side side : {Side::right, Side::left}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(side_name(side));
                HomHopfAlgebra B = canonical_bicross(zoo::get(name), n, side);
                CHECK(B.dim() == zoo::get(name).dim() * zoo::get(name).dim());
                CheckReport r = check_structure(B, Suite::hopf);
                CHECK_MESSAGE(r.passed(), r.format());
            }
}

TEST_CASE("canonical data passes both condition sets with their hypotheses") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1}) {
            CAPTURE(name);
            CAPTURE(n);
            const HomHopfAlgebra& H = zoo::get(name);
            const HomHopfAlgebra Hop = opposite_hopf(H);
            auto [act, co] = canonical_action_coaction(H, n, Side::right);
            ConditionData d;
            d.A = H.bialgebra;
            d.H = Hop.bialgebra;
            d.action = act;
            d.coaction_A = co;
            CheckReport r = check_condition_set(ConditionSet::bicross_right, d);
            CHECK_MESSAGE(r.passed(), r.format());
            CHECK(r.find("bicross-right.action-coaction-compatible"));
            CHECK(r.find("action.module-algebra.unit") != nullptr);

            auto [actl, col] = canonical_action_coaction(H, n, Side::left);
            ConditionData e;
            e.A = Hop.bialgebra;
            e.H = H.bialgebra;
            e.action = actl;
            e.coaction_H = col;
            CheckReport l = check_condition_set(ConditionSet::bicross_left, e);
            CHECK_MESSAGE(l.passed(), l.format());
            CHECK(l.verdicts.size() > 5);
        }
}

TEST_CASE("a perturbed coaction breaks the conditions and the product") {
    for (const auto& name : zoo::names()) {
        const HomHopfAlgebra& H = zoo::get(name);
        if (H.dim() < 2) continue;
        CAPTURE(name);
        const HomHopfAlgebra Hop = opposite_hopf(H);
        auto [act, co] = canonical_action_coaction(H, 0, Side::right);
        co.tensor(1, 0, 1) += Rational(1);
        ConditionData d;
        d.A = H.bialgebra;
        d.H = Hop.bialgebra;
        d.action = act;
        d.coaction_A = co;
        CHECK_FALSE(check_condition_set(ConditionSet::bicross_right, d).passed());
        CHECK_THROWS_AS(bicross_right(H, Hop, act, co), LawViolation);
        HomHopfAlgebra forced = bicross_right(H, Hop, act, co, ProductOptions{true, {}});
        CHECK(forced.carrier().provenance.unverified);
        CHECK_FALSE(check_structure(forced, Suite::hopf).passed());
    }
}

TEST_CASE("the violation names the failing condition") {
    const HomHopfAlgebra& H = zoo::get("sweedler4");
    const HomHopfAlgebra Hop = opposite_hopf(H);
    auto [act, co] = canonical_action_coaction(H, 0, Side::right);
    co.tensor(1, 0, 1) += Rational(1);
    try {
        bicross_right(H, Hop, act, co);
        FAIL("expected LawViolation");
    } catch (const LawViolation& e) {
        CHECK(std::string(e.what()).find("law ") != std::string::npos);
        CHECK_FALSE(e.report().passed());
    }
}

TEST_CASE("trivial data gives the tensor product Hopf algebra") {
    const HomHopfAlgebra& A = zoo::get("group-c2");
    const HomHopfAlgebra& H = zoo::get("classical-sweedler4");
    same_structure(bicross_right(A, H, trivial_right_action(A, H), trivial_left_coaction(A, H)),
                   zoo::tensor_hopf(A, H));
    same_structure(bicross_left(H, A, trivial_left_action(H, A), trivial_right_coaction(H, A)),
                   zoo::tensor_hopf(H, A));
    const HomHopfAlgebra& k = zoo::get("k");
    same_structure(bicross_right(k, k, trivial_right_action(k, k), trivial_left_coaction(k, k)), k);
}

TEST_CASE("trivial data on Hom objects still passes the suite") {
    const HomHopfAlgebra& A = zoo::get("sweedler4");
    const HomHopfAlgebra& H = zoo::get("group-c3-inv");
    CHECK(check_structure(bicross_right(A, H, trivial_right_action(A, H), trivial_left_coaction(A, H))).passed());
    CHECK(check_structure(bicross_left(A, H, trivial_left_action(A, H), trivial_right_coaction(A, H))).passed());
}

TEST_CASE("bicrossproduct agrees with the smash product and coproduct") {
    for (const auto& name : zoo::names()) {
        CAPTURE(name);
        const HomHopfAlgebra& H = zoo::get(name);
        const HomHopfAlgebra Hop = opposite_hopf(H);
        auto [act, co] = canonical_action_coaction(H, 1, Side::right);
        HomHopfAlgebra B = bicross_right(H, Hop, act, co);
        HomAlgebra sp = smash_product_right(H.bialgebra, Hop.algebra(), act);
        HomCoalgebra sc = smash_coproduct_left(H.coalgebra(), Hop.bialgebra, co);
        CHECK(B.mult() == sp.mult);
        CHECK(B.unit() == sp.unit);
        CHECK(B.comult() == sc.comult);
        CHECK(B.counit() == sc.counit);
        CHECK(check_structure(sp).passed());
        CHECK(check_structure(sc).passed());
    }
}

TEST_CASE("smash coproduct from the canonical coaction on k[C3]") {
    const HomHopfAlgebra& H = zoo::get("group-c3");
    auto [act, co] = canonical_action_coaction(H, 0, Side::right);
    HomCoalgebra sc = smash_coproduct_left(H.coalgebra(), opposite_hopf(H).bialgebra, co);
    CHECK(sc.dim() == 9);
    CHECK(check_structure(sc).passed());
}

TEST_CASE("k[C2] canonical bicrossproduct is the tensor product") {
    const HomHopfAlgebra& H = zoo::get("group-c2");
    same_structure(canonical_bicross(H, 0, Side::right), zoo::tensor_hopf(H, opposite_hopf(H)));
    same_structure(canonical_bicross(H, 0, Side::left), zoo::tensor_hopf(opposite_hopf(H), H));
}

TEST_CASE("conjugation on an abelian group algebra is trivial") {
    const HomHopfAlgebra& H = zoo::get("group-c3");
    auto [act, co] = canonical_action_coaction(H, 0, Side::right);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t h = 0; h < 3; ++h)
            for (std::size_t o = 0; o < 3; ++o) CHECK(act.tensor(x, h, o) == Rational(x == o ? 1 : 0));
    CHECK(check_action_laws(act, H.bialgebra, opposite_hopf(H).algebra(), ActionLevel::module_algebra, Side::right)
              .passed());
}

TEST_CASE("canonical maps on sweedler4 at n = -1 pass their own laws") {
    const HomHopfAlgebra& H = zoo::get("sweedler4");
    const HomHopfAlgebra Hop = opposite_hopf(H);
    for (Side side : {Side::right, Side::left}) {
        auto [act, co] = canonical_action_coaction(H, -1, side);
        CHECK(check_action_laws(act, H.bialgebra, Hop.algebra(), ActionLevel::module_algebra, side).passed());
        Side co_side = side == Side::right ? Side::left : Side::right;
        CHECK(check_coaction_laws(co, Hop.bialgebra, H.coalgebra(), CoactionLevel::comodule_coalgebra, co_side)
                  .passed());
    }
}

TEST_CASE("k gives k") {
    const HomHopfAlgebra& k = zoo::get("k");
    same_structure(canonical_bicross(k, 0, Side::right), k);
    same_structure(canonical_bicross(k, 5, Side::left), k);
}

TEST_CASE("missing ingredients are named") {
    ConditionData d;
    d.A = zoo::get("k").bialgebra;
    CHECK_THROWS_AS(check_condition_set(ConditionSet::bicross_right, d), MissingStructure);
    CHECK_THROWS_AS(check_condition_set(ConditionSet::cqt, d), MissingStructure);
    CHECK_THROWS_AS(parse_condition_set("bogus"), BadParam);
    CHECK(parse_condition_set("matched-copair") == ConditionSet::matched_copair);
}

TEST_CASE("a singular antipode is refused") {
    HomHopfAlgebra H = zoo::get("group-c2");
    H.antipode = Tensor({2, 2});
    CHECK_THROWS_AS(canonical_action_coaction(H, 0, Side::right), Singular);
}

}
