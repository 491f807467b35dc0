#include <functional>
#include <random>

#include "doctest.h"
#include "hombox/builtins.hpp"
#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/sweedler.hpp"

using namespace hombox;

namespace {

SweedlerEnv env_of(const HomHopfAlgebra& h) {
    SweedlerEnv env;
    env.spaces["H"] = sweedler_space(h);
    env.default_space = "H";
    return env;
}

HomHopfAlgebra mutated(HomHopfAlgebra h, int which, std::size_t flat) {
    Tensor* targets[] = {&h.bialgebra.algebra.mult, &h.bialgebra.coalgebra.comult, &h.antipode};
    Tensor& t = *targets[which];
    t[flat] = t[flat] + Rational(1);
    return h;
}

// Expands the listed leaves of a complete tree of coproduct words by explicit
// loops over the structure constants.
Tensor naive_words(const HomHopfAlgebra& H, std::size_t input, const std::vector<std::string>& leaves) {
    const auto d = H.dim();
    const Tensor& D = H.comult();
    Shape shape(leaves.size(), d);
    Tensor out(shape);
    std::function<void(std::vector<std::pair<std::string, std::size_t>>, Rational, std::map<std::string, std::size_t>)>
        rec = [&](std::vector<std::pair<std::string, std::size_t>> todo, Rational c,
                  std::map<std::string, std::size_t> done) {
            if (todo.empty()) {
                std::vector<std::size_t> idx;
                for (const auto& l : leaves) idx.push_back(done.at(l));
                out.at(idx) = out.at(idx) + c;
                return;
            }
            auto [word, i] = todo.back();
            todo.pop_back();
            if (std::find(leaves.begin(), leaves.end(), word) != leaves.end()) {
                done[word] = i;
                rec(todo, c, done);
                return;
            }
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    const Rational& v = D(i, j, k);
                    if (v.is_zero()) continue;
                    auto next = todo;
                    next.push_back({word + "1", j});
                    next.push_back({word + "2", k});
                    rec(next, c * v, done);
                }
        };
    rec({{"", input}}, Rational(1), {});
    return out;
}

// All complete trees over {1,2} of depth at most 3, as leaf lists.
std::vector<std::vector<std::string>> trees(const std::string& prefix, int depth) {
    std::vector<std::vector<std::string>> r = {{prefix}};
    if (depth == 0) return r;
    for (const auto& a : trees(prefix + "1", depth - 1))
        for (const auto& b : trees(prefix + "2", depth - 1)) {
            auto t = a;
            t.insert(t.end(), b.begin(), b.end());
            r.push_back(t);
        }
    return r;
}

}  // namespace

TEST_SUITE("hom_core") {

TEST_CASE("every builtin passes the hopf suite") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        HomHopfAlgebra h = builtin(name);
        CheckReport r = check_structure(h, Suite::hopf);
        CHECK(r.passed());
        CHECK(r.verdicts.size() == 19);
        CHECK(check_structure(h.bialgebra, Suite::bialgebra).passed());
        CHECK(check_structure(h.algebra()).passed());
        CHECK(check_structure(h.coalgebra()).passed());
    }
}

TEST_CASE("suites above the object's level are refused") {
    HomHopfAlgebra h = builtin("group-c2");
    CHECK_THROWS_AS(check_structure(h.algebra(), Suite::hopf), MissingStructure);
    CHECK_THROWS_AS(check_structure(h.bialgebra, Suite::hopf), MissingStructure);
    CHECK_THROWS_AS(check_structure(h.coalgebra(), Suite::algebra), MissingStructure);
}

TEST_CASE("dimension-inconsistent objects are rejected") {
    HomHopfAlgebra h = builtin("group-c2");
    h.antipode = Tensor::identity(3);
    CHECK_THROWS_AS(check_structure(h), DimMismatch);
}

TEST_CASE("mutating x·x in sweedler4 is caught with a triple witness") {
    HomHopfAlgebra h = builtin("sweedler4");
    Tensor& m = h.bialgebra.algebra.mult;
    m(2, 2, 0) = 1;
    CheckReport r = check_structure(h);
    CHECK_FALSE(r.passed());
    const Verdict* v = r.find("algebra.hom-associativity");
    REQUIRE(v);
    CHECK_FALSE(v->passed());
    REQUIRE(!v->witnesses.empty());
    CHECK(v->witnesses[0].index == std::vector<std::size_t>{0, 2, 2});
    CHECK(r.format().find("LAW algebra.hom-associativity") != std::string::npos);
    // x·x never occurs in S(h₁)h₂ or h₁S(h₂) on this basis
    CHECK(r.find("hopf.antipode-left")->passed());
    CHECK(r.find("hopf.antipode-right")->passed());
}

TEST_CASE("single-constant mutations of sweedler4 are detected") {
    HomHopfAlgebra h = builtin("sweedler4");
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int which = trial % 3;
        std::size_t size = which == 2 ? 16 : 64;
        std::size_t flat = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
        CAPTURE(which);
        CAPTURE(flat);
        CHECK(check_structure(mutated(h, which, flat)).failures() >= 1);
    }
}

TEST_CASE("the trivial algebra") {
    HomHopfAlgebra k = builtin("k");
    CHECK(k.dim() == 1);
    CHECK(check_structure(k).passed());
}

TEST_CASE("witness reporting can list every violation") {
    HomHopfAlgebra h = builtin("group-c3");
    h.bialgebra.algebra.mult(1, 1, 2) = 0;
    CheckReport first = check_structure(h.algebra());
    CheckReport all = check_structure(h.algebra(), Suite::algebra, CheckOptions{true});
    const Verdict* a = first.find("algebra.hom-associativity");
    const Verdict* b = all.find("algebra.hom-associativity");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->witnesses.size() == 1);
    CHECK(b->witnesses.size() == b->violations);
    CHECK(a->violations == b->violations);
    // the lexicographically first failing triple comes first
    CHECK(a->witnesses[0].index == b->witnesses[0].index);
}

TEST_CASE("counit maps equal β⁻¹ as matrices") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        HomHopfAlgebra h = builtin(name);
        SweedlerEnv env = env_of(h);
        Tensor bi = transpose(mat_inverse(h.beta()));
        CHECK(sweedler_map("ε(h_1)h_2", {"h"}, env) == bi);
        CHECK(sweedler_map("h_1 eps(h_2)", {"h"}, env) == bi);
    }
}

TEST_CASE("sweedler evaluation examples") {
    HomHopfAlgebra h = builtin("sweedler4");
    SweedlerEnv env = env_of(h);
    for (std::size_t i = 0; i < 4; ++i) {
        Tensor lhs = sweedler_eval("S(h_1)·h_2", {{"h", i}}, env);
        Tensor rhs = h.counit()[i] * h.unit();
        CHECK(lhs == rhs);
    }
    CHECK(sweedler_eval("h", {{"h", 2}}, env) == Tensor::basis_vector(4, 2));
    CHECK(sweedler_eval("2·h - h", {{"h", 3}}, env) == Tensor::basis_vector(4, 3));
    CHECK(sweedler_eval("β^{-1}(h)", {{"h", 2}}, env) == Rational(1, 2) * Tensor::basis_vector(4, 2));
    CHECK(sweedler_eval("ε(h)", {{"h", 1}}, env) == Tensor::scalar(1));
    CHECK(sweedler_eval("h ⊗ 1_H", {{"h", 1}}, env) ==
          tensor_product(Tensor::basis_vector(4, 1), Tensor::basis_vector(4, 0)));
    // Hom-associativity written out
    Tensor l = sweedler_map("β(a)(bc)", {"a", "b", "c"}, env);
    Tensor r = sweedler_map("(ab)β(c)", {"a", "b", "c"}, env);
    CHECK(l == r);
    env.params["n"] = 1;
    CHECK(sweedler_map("β^{n+1}(h)", {"h"}, env) == transpose(mat_power(h.beta(), 2)));
    CHECK(sweedler_map("β^{2n-3}(h)", {"h"}, env) == transpose(mat_power(h.beta(), -1)));
}

TEST_CASE("sweedler errors") {
    SweedlerEnv env = env_of(builtin("sweedler4"));
    CHECK_THROWS_AS(sweedler_eval("h", {}, env), UnboundVariable);
    CHECK_THROWS_AS(sweedler_eval("h_1", {{"h", 0}}, env), MalformedIndexWord);
    CHECK_THROWS_AS(sweedler_eval("h_1 h_1 h_2", {{"h", 0}}, env), MalformedIndexWord);
    CHECK_THROWS_AS(sweedler_eval("h_1 h", {{"h", 0}}, env), MalformedIndexWord);
    CHECK_THROWS_AS(sweedler_eval("h_{1[0]} h_2", {{"h", 0}}, env), MalformedIndexWord);
    CHECK_THROWS_AS(sweedler_eval("h_3", {{"h", 0}}, env), MalformedIndexWord);
    CHECK_THROWS_AS(sweedler_eval("h_{1[-1]} ⊗ h_{1[0]} ⊗ h_2", {{"h", 0}}, env), MissingStructure);
    CHECK_THROWS_AS(sweedler_eval("(h ⊗ h_1", {{"h", 0}}, env), ExpressionError);
    CHECK_THROWS_AS(sweedler_eval("h", {{"h", 9}}, env), DimMismatch);
}

TEST_CASE("index words agree with a naive nested expansion") {
    for (const auto& name : {"group-c3-inv", "sweedler4"}) {
        HomHopfAlgebra h = builtin(name);
        SweedlerEnv env = env_of(h);
        for (const auto& leaves : trees("", 3)) {
            if (leaves.size() == 1) continue;
            std::string expr;
            for (std::size_t i = 0; i < leaves.size(); ++i) expr += (i ? " ⊗ h_{" : "h_{") + leaves[i] + "}";
            CAPTURE(expr);
            for (std::size_t i = 0; i < h.dim(); ++i)
                CHECK(sweedler_eval(expr, {{"h", i}}, env) == naive_words(h, i, leaves));
            // reversed listing order gives the permuted tensor
            std::vector<std::string> rev(leaves.rbegin(), leaves.rend());
            std::string rexpr;
            for (std::size_t i = 0; i < rev.size(); ++i) rexpr += (i ? " ⊗ h_{" : "h_{") + rev[i] + "}";
            CHECK(sweedler_eval(rexpr, {{"h", 1}}, env) == naive_words(h, 1, rev));
        }
    }
}

TEST_CASE("unicode and bare-digit subscripts") {
    HomHopfAlgebra h = builtin("sweedler4");
    SweedlerEnv env = env_of(h);
    CHECK(sweedler_eval("h₁ ⊗ h₂₁ ⊗ h₂₂", {{"h", 2}}, env) == sweedler_eval("h_1 & h_{21} & h_22", {{"h", 2}}, env));
}

TEST_CASE("coactions in index notation") {
    HomHopfAlgebra h = builtin("sweedler4");
    SweedlerEnv env = env_of(h);
    env.spaces["H"].left_coaction =
        CoactionMap{Side::left, "H", "H", h.beta(), permute(h.comult(), {0, 1, 2})};
    env.spaces["H"].left_coactor = "H";
    // with Δ itself as the coaction, h[-1] ⊗ h[0] is h_1 ⊗ h_2
    CHECK(sweedler_eval("h_{[-1]} ⊗ h_{[0]}", {{"h", 2}}, env) == sweedler_eval("h_1 ⊗ h_2", {{"h", 2}}, env));
    CHECK(sweedler_eval("h_{1} ⊗ h_{2[-1]} ⊗ h_{2[0]}", {{"h", 3}}, env) ==
          sweedler_eval("h_1 ⊗ h_21 ⊗ h_22", {{"h", 3}}, env));
}

TEST_CASE("regular actions on the dual pass module-algebra laws") {
    for (const auto& name : builtin_names()) {
        HomHopfAlgebra h = builtin(name);
        HomHopfAlgebra d = dual_hopf(h);
        for (long long i = -2; i <= 2; ++i) {
            CAPTURE(name);
            CAPTURE(i);
            CHECK(check_action_laws(regular_action_right(h, i), h.bialgebra, d.algebra(), ActionLevel::module_algebra,
                                    Side::right)
                      .passed());
            CHECK(check_action_laws(regular_action_left(h, i), h.bialgebra, d.algebra(), ActionLevel::module_algebra,
                                    Side::left)
                      .passed());
        }
    }
}

TEST_CASE("action law failures and misuse") {
    HomHopfAlgebra h = builtin("group-c2");
    HomHopfAlgebra d = dual_hopf(h);
    ActionMap act = regular_action_right(h, 0);
    CHECK_THROWS_AS(check_action_laws(act, h.bialgebra, d.algebra(), ActionLevel::module, Side::left), SideMismatch);
    act.tensor = Tensor(act.tensor.shape());
    CheckReport r = check_action_laws(act, h.bialgebra, d.algebra(), ActionLevel::module_algebra, Side::right);
    const Verdict* v = r.find("module-algebra.unit");
    REQUIRE(v);
    CHECK_FALSE(v->passed());
    ActionMap bad = regular_action_right(h, 0);
    bad.tensor = Tensor({2, 3, 2});
    CHECK_THROWS_AS(check_action_laws(bad, h.bialgebra, d.algebra(), ActionLevel::module, Side::right), DimMismatch);
}

TEST_CASE("trivial coaction is a comodule and swapping its outputs is not") {
    HomHopfAlgebra h = builtin("sweedler4");
    const auto d = h.dim();
    Tensor bi = mat_inverse(h.beta());
    Tensor t({d, d, d});
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t m0 = 0; m0 < d; ++m0) t(m, 0, m0) = bi(m0, m);
    CoactionMap left{Side::left, "H4", "H4", h.beta(), t};
    CHECK(check_coaction_laws(left, h.bialgebra, h.algebra(), CoactionLevel::comodule, Side::left).passed());
    CoactionMap swapped = left;
    swapped.tensor = permute(t, {0, 2, 1});
    CheckReport r = check_coaction_laws(swapped, h.bialgebra, h.algebra(), CoactionLevel::comodule, Side::left);
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure());
    CHECK(!r.first_failure()->witnesses.empty());
    CHECK_THROWS_AS(check_coaction_laws(left, h.bialgebra, h.algebra(), CoactionLevel::comodule, Side::right),
                    SideMismatch);
    CHECK_THROWS_AS(
        check_coaction_laws(left, h.bialgebra, h.coalgebra(), CoactionLevel::comodule_algebra, Side::left),
        MissingStructure);
}

TEST_CASE("Δ is a comodule coalgebra structure of H on itself") {
    HomHopfAlgebra h = builtin("group-c3-inv");
    CoactionMap right{Side::right, "kC3inv", "kC3inv", h.beta(), h.comult()};
    CHECK(check_coaction_laws(right, h.bialgebra, h.algebra(), CoactionLevel::comodule_algebra, Side::right).passed());
}

}
