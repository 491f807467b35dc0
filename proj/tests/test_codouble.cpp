#include "classical.hpp"
#include "doctest.h"
#include "hombox/codouble.hpp"
#include "hombox/conditions.hpp"
#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "zoo.hpp"

using namespace hombox;

namespace {

ConditionData copair_data(const MatchedCopair& c) {
    ConditionData d;
    d.A = c.A.bialgebra;
    d.H = c.H.bialgebra;
    d.coaction_A = c.rho_A;
    d.coaction_H = c.rho_H;
    return d;
}

}  // namespace

TEST_SUITE("codouble") {

TEST_CASE("both codoubles pass the hopf suite on every builtin") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1})
            for (auto v : {CodoubleVariant::T, CodoubleVariant::That}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(variant_name(v));
                HomHopfAlgebra T = drinfeld_codouble(zoo::get(name), n, v);
                CheckReport r = check_structure(T, Suite::hopf);
                CHECK_MESSAGE(r.passed(), r.format());
                CHECK(T.carrier().provenance.n == n);
            }
}

TEST_CASE("induced copairs are matched") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1})
            for (Side side : {Side::right, Side::left}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(side_name(side));
                MatchedCopair c = copair_from_bicross(canonical_bicross_data(zoo::get(name), n, side));
                CheckReport r = check_condition_set(ConditionSet::matched_copair, copair_data(c));
                CHECK_MESSAGE(r.passed(), r.format());
                CHECK(r.find("matched-copair.coactions-commute"));
            }
}

TEST_CASE("closed formulas agree with the double crosscoproduct path") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1})
            for (auto v : {CodoubleVariant::T, CodoubleVariant::That}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(variant_name(v));
                HomHopfAlgebra a = drinfeld_codouble(zoo::get(name), n, v);
                HomHopfAlgebra b = codouble_via_copair(zoo::get(name), n, v);
                CHECK(a.mult() == b.mult());
                CHECK(a.comult() == b.comult());
                CHECK(a.unit() == b.unit());
                CHECK(a.counit() == b.counit());
                CHECK(a.antipode == b.antipode);
                CHECK(a.beta() == b.beta());
            }
}

TEST_CASE("the unit is grouplike") {
    for (const auto& name : zoo::names())
        for (long long n : {-1, 0, 1}) {
            HomHopfAlgebra T = drinfeld_codouble(zoo::get(name), n, CodoubleVariant::T);
            const Tensor& u = T.unit();
            Tensor lhs = contract(T.comult(), u, {{0, 0}}, LabelCheck::skip);
            CHECK(lhs == tensor_product(u, u));
        }
}

TEST_CASE("k gives k") {
    const HomHopfAlgebra& k = zoo::get("k");
    for (auto v : {CodoubleVariant::T, CodoubleVariant::That}) {
        HomHopfAlgebra T = drinfeld_codouble(k, 3, v);
        CHECK(T.dim() == 1);
        CHECK(T.mult() == k.mult());
        CHECK(T.comult() == k.comult());
        CHECK(T.antipode == k.antipode);
    }
}

TEST_CASE("trivial coactions give the tensor product") {
    const HomHopfAlgebra& A = zoo::get("group-c2");
    const HomHopfAlgebra& H = zoo::get("classical-sweedler4");
    Tensor ra({A.dim(), H.dim(), A.dim()}), rh({H.dim(), H.dim(), A.dim()});
    for (std::size_t a = 0; a < A.dim(); ++a)
        for (std::size_t l = 0; l < H.dim(); ++l) ra(a, l, a) = H.unit()[l];
    for (std::size_t h = 0; h < H.dim(); ++h)
        for (std::size_t a = 0; a < A.dim(); ++a) rh(h, h, a) = A.unit()[a];
    MatchedCopair c{A, H, CoactionMap{Side::left, H.label(), A.label(), A.beta(), ra},
                    CoactionMap{Side::right, A.label(), H.label(), H.beta(), rh}};
    HomHopfAlgebra D = double_crosscoproduct(c);
    HomHopfAlgebra P = zoo::tensor_hopf(A, H);
    CHECK(D.mult() == P.mult());
    CHECK(D.comult() == P.comult());
    CHECK(D.antipode == P.antipode);
}

TEST_CASE("a broken copair is refused") {
    MatchedCopair c = copair_from_bicross(canonical_bicross_data(zoo::get("sweedler4"), 0, Side::right));
    c.rho_H.tensor(1, 1, 0) += Rational(1);
    CHECK_THROWS_AS(double_crosscoproduct(c), LawViolation);
    HomHopfAlgebra forced = double_crosscoproduct(c, ProductOptions{true, {}});
    CHECK(forced.carrier().provenance.unverified);
}

TEST_CASE("k[C2] right copair: the first coaction is ε ⊗ h") {
    MatchedCopair c = copair_from_bicross(canonical_bicross_data(zoo::get("group-c2"), 0, Side::right));
    for (std::size_t h = 0; h < 2; ++h)
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t o = 0; o < 2; ++o) CHECK(c.rho_A.tensor(h, s, o) == Rational(h == o ? 1 : 0));
}

TEST_CASE("classical codoubles match the loop evaluator") {
    for (const char* name : {"group-c2", "group-c3", "classical-sweedler4"}) {
        CAPTURE(name);
        const HomHopfAlgebra& H = zoo::get(name);
        classical::Codouble t = classical::codouble_T(H), th = classical::codouble_That(H);
        HomHopfAlgebra T = drinfeld_codouble(H, 0, CodoubleVariant::T);
        HomHopfAlgebra Th = drinfeld_codouble(H, 0, CodoubleVariant::That);
        CHECK(T.mult() == t.mult);
        CHECK(T.comult() == t.comult);
        CHECK(Th.mult() == th.mult);
        CHECK(Th.comult() == th.comult);
    }
}

TEST_CASE("the closed formulas keep their β powers") {
    // with β ≠ id the n-dependence is visible
    const HomHopfAlgebra& H = zoo::get("sweedler4");
    CHECK(drinfeld_codouble(H, 0, CodoubleVariant::T).comult() != drinfeld_codouble(H, 1, CodoubleVariant::T).comult());
}

}
