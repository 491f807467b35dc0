// One PASS/FAIL line per acceptance criterion; details of failures go to stderr.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <unistd.h>

#include "classical.hpp"
#include "hombox/braiding.hpp"
#include "hombox/builtins.hpp"
#include "hombox/cli.hpp"
#include "hombox/codouble.hpp"
#include "hombox/conditions.hpp"
#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"
#include "hombox/products.hpp"

using namespace hombox;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<std::string> kBase = {"k", "group-c2", "group-c3", "group-c3-inv", "sweedler4",
                                        "classical-sweedler4"};
const std::vector<long long> kNs = {-1, 0, 1};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

const HomHopfAlgebra& zoo(const std::string& name) {
    static std::map<std::string, HomHopfAlgebra> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, builtin(name)).first;
    return it->second;
}

// Collects failures of one criterion.
struct Tally {
    std::vector<std::string> problems;
    double slowest = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void report(const CheckReport& r, const std::string& what) {
        if (const Verdict* v = r.first_failure()) problems.push_back(what + ": " + format_verdict(*v));
    }
    // Runs one timed instance; exceptions count as failures.
    void timed(const std::string& what, double limit, const std::function<void()>& body) {
        auto t = Clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            problems.push_back(what + ": " + e.what());
        }
        double s = seconds_since(t);
        slowest = std::max(slowest, s);
        if (limit > 0 && s > limit) {
            std::ostringstream os;
            os << what << " took " << std::fixed << std::setprecision(2) << s << " s, limit " << limit << " s";
            problems.push_back(os.str());
        }
    }
};

bool same_hopf(const HomHopfAlgebra& x, const HomHopfAlgebra& y) {
    return x.mult() == y.mult() && x.unit() == y.unit() && x.comult() == y.comult() && x.counit() == y.counit() &&
           x.antipode == y.antipode && x.beta() == y.beta();
}

std::string tag(const std::string& name, long long n) { return name + " n=" + std::to_string(n); }

int cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return run_cli(args, out, err);
}

void structure_suites(Tally& t) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("hombox-accept-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (const auto& base : kBase)
        for (const std::string name : {base, "dual-of:" + base}) {
            const std::string file = (dir / (std::to_string(std::hash<std::string>{}(name)) + ".json")).string();
            t.timed(name, 1.0, [&] {
                t.expect(cli({"builtin", name, "--out", file}) == kExitPass, name + ": builtin failed");
                t.expect(cli({"check", file, "--suite", "hopf"}) == kExitPass, name + ": hopf suite failed");
            });
        }
    fs::remove_all(dir);
}

void canonical_bicrossproducts(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs)
            for (Side side : {Side::right, Side::left}) {
                const std::string what = tag(name, n) + " " + side_name(side);
                t.timed(what, 10.0, [&] { t.report(check_structure(canonical_bicross(zoo(name), n, side)), what); });
            }
}

void bicross_conditions(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                const HomHopfAlgebra Hop = opposite_hopf(H);
                auto [act, co] = canonical_action_coaction(H, n, Side::right);
                ConditionData d;
                d.A = H.bialgebra;
                d.H = Hop.bialgebra;
                d.action = act;
                d.coaction_A = co;
                t.report(check_condition_set(ConditionSet::bicross_right, d), what);

                CoactionMap bent = co;
                if (H.dim() > 1) bent.tensor(1, 0, 1) += Rational(1);
                else bent.tensor(0, 0, 0) += Rational(1);
                d.coaction_A = bent;
                t.expect(!check_condition_set(ConditionSet::bicross_right, d).passed(),
                         what + ": perturbed coaction passes the conditions");
                HomHopfAlgebra forced = bicross_right(H, Hop, act, bent, ProductOptions{true, {}});
                t.expect(!check_structure(forced).passed(), what + ": perturbed bicrossproduct passes the hopf suite");
            });
        }
}

ConditionData copair_data(const MatchedCopair& c) {
    ConditionData d;
    d.A = c.A.bialgebra;
    d.H = c.H.bialgebra;
    d.coaction_A = c.rho_A;
    d.coaction_H = c.rho_H;
    return d;
}

void codoubles(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                for (Side side : {Side::right, Side::left}) {
                    MatchedCopair c = copair_from_bicross(canonical_bicross_data(H, n, side));
                    t.report(check_condition_set(ConditionSet::matched_copair, copair_data(c)),
                             what + " copair " + side_name(side));
                }
                for (CodoubleVariant v : {CodoubleVariant::T, CodoubleVariant::That}) {
                    HomHopfAlgebra T = drinfeld_codouble(H, n, v);
                    t.report(check_structure(T), what + " " + variant_name(v));
                    t.expect(same_hopf(T, codouble_via_copair(H, n, v)),
                             what + " " + variant_name(v) + ": closed formulas differ from the copair product");
                }
            });
        }
}

void cqt_forms(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                for (CodoubleVariant v : {CodoubleVariant::T, CodoubleVariant::That}) {
                    const std::string w = what + " " + variant_name(v);
                    HomHopfAlgebra T = drinfeld_codouble(H, n, v);
                    CqtForm f = codouble_cqt_form(T, H, n, v);
                    ConditionData d;
                    d.C = T.bialgebra;
                    d.form = f.zeta.matrix;
                    t.report(check_condition_set(ConditionSet::cqt, d), w);
                    t.expect(f.inverse_verified, w + ": displayed inverse fails");
                    t.expect(is_convolution_inverse(f.zeta.matrix, f.zeta_inverse.matrix, T.bialgebra),
                             w + ": displayed inverse is not a convolution inverse");
                    t.expect(convolution_inverse(f.zeta, T).matrix == f.zeta_inverse.matrix,
                             w + ": linear solve disagrees with the displayed inverse");
                }
            });
        }
}

void cocycles(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                for (Side side : {Side::left, Side::right}) {
                    const CodoubleVariant v = side == Side::left ? CodoubleVariant::T : CodoubleVariant::That;
                    const std::string w = what + " " + side_name(side);
                    HomHopfAlgebra T = drinfeld_codouble(H, n, v);
                    BilinearForm sigma = cocycle_from_cqt(codouble_cqt_form(T, H, n, v).zeta, side);
                    ConditionData d;
                    d.C = T.bialgebra;
                    d.form = sigma.matrix;
                    CheckReport r = check_condition_set(
                        side == Side::left ? ConditionSet::cocycle_left : ConditionSet::cocycle_right, d);
                    t.report(r, w);
                    t.expect(r.find("cocycle.normal-left") && r.find("cocycle.normal-right"),
                             w + ": normality not checked");
                    t.report(check_structure(twist(T, sigma, side)), w + " twist");
                }
            });
        }
}

void headline(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                for (CodoubleVariant v : {CodoubleVariant::T, CodoubleVariant::That}) {
                    CheckReport r = verify_thm510(zoo(name), n, v);
                    t.report(r, what + " " + variant_name(v));
                    const char* id = v == CodoubleVariant::T ? "twist-equals-heisenberg" : "twist-equals-heisenberg-dual";
                    t.expect(r.find(id) != nullptr, what + ": missing " + id);
                }
            });
        }
}

void comodule_algebras(Tally& t) {
    for (const auto& name : kBase)
        for (long long n : kNs) {
            const std::string what = tag(name, n);
            t.timed(what, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                t.report(comodule_algebra_from_twist(heisenberg_double(H, n, HeisenbergVariant::H),
                                                     drinfeld_codouble(H, n, CodoubleVariant::T), Side::right),
                         what + " right");
                t.report(comodule_algebra_from_twist(heisenberg_double(H, n, HeisenbergVariant::Hdual),
                                                     drinfeld_codouble(H, n, CodoubleVariant::That), Side::left),
                         what + " left");
            });
        }
}

void classical_reduction(Tally& t) {
    t.timed("classical-sweedler4", 0, [&] {
        const HomHopfAlgebra& H = zoo("classical-sweedler4");
        const HomHopfAlgebra Hop = opposite_hopf(H);
        const ActionMap act = canonical_action_coaction(H, 0, Side::right).first;
        const std::size_t d = H.dim();
        Tensor reversed({d, d, d});
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t o = 0; o < d; ++o) reversed(a, b, o) = H.mult()(b, a, o);
        t.expect(act.tensor == classical::conjugation_right(H), "canonical action");
        t.expect(smash_product_right(H.bialgebra, Hop.algebra(), act).mult ==
                     classical::smash_right(H.mult(), H.comult(), reversed, classical::conjugation_right(H)),
                 "smash product");
        classical::Codouble ct = classical::codouble_T(H), cth = classical::codouble_That(H);
        HomHopfAlgebra T = drinfeld_codouble(H, 0, CodoubleVariant::T);
        HomHopfAlgebra Th = drinfeld_codouble(H, 0, CodoubleVariant::That);
        t.expect(T.mult() == ct.mult && T.comult() == ct.comult, "codouble T");
        t.expect(Th.mult() == cth.mult && Th.comult() == cth.comult, "codouble T-hat");
        Tensor z = codouble_cqt_form(T, H, 0, CodoubleVariant::T).zeta.matrix;
        Tensor zh = codouble_cqt_form(Th, H, 0, CodoubleVariant::That).zeta.matrix;
        t.expect(z == classical::zeta(H, false) && zh == classical::zeta(H, true), "braiding forms");
        Tensor sl = cocycle_from_cqt({T.label(), z}, Side::left).matrix;
        t.expect(sl == transpose(classical::zeta(H, false)), "left cocycle");
        t.expect(twist(T, {T.label(), sl}, Side::left).mult == classical::twist(T.mult(), T.comult(), sl, true),
                 "left twist");
        t.expect(twist(Th, {Th.label(), zh}, Side::right).mult == classical::twist(Th.mult(), Th.comult(), zh, false),
                 "right twist");
        t.expect(heisenberg_double(H, 0, HeisenbergVariant::H).mult == classical::heisenberg(H), "Heisenberg double");
        t.expect(heisenberg_double(H, 0, HeisenbergVariant::Hdual).mult == classical::heisenberg_dual(H),
                 "dual Heisenberg double");
    });
}

void dual_and_mutation(Tally& t) {
    for (const auto& base : kBase)
        for (const std::string name : {base, "dual-of:" + base})
            t.timed(name, 0, [&] {
                const HomHopfAlgebra& H = zoo(name);
                t.expect(same_hopf(dual_hopf(dual_hopf(H)), H), name + ": dual of dual differs");
            });
    t.timed("mutations", 0, [&] {
        const HomHopfAlgebra& S = zoo("sweedler4");
        std::mt19937 rng(20261014);
        for (int trial = 0; trial < 10; ++trial) {
            HomHopfAlgebra m = S;
            Tensor* targets[] = {&m.bialgebra.algebra.mult, &m.bialgebra.coalgebra.comult, &m.antipode};
            Tensor& target = *targets[std::uniform_int_distribution<int>(0, 2)(rng)];
            const std::size_t flat = std::uniform_int_distribution<std::size_t>(0, target.size() - 1)(rng);
            target[flat] += Rational(1);
            t.expect(check_structure(m).failures() >= 1, "mutation " + std::to_string(trial) + " at entry " +
                                                             std::to_string(flat) + " goes unnoticed");
        }
    });
}

struct Criterion {
    const char* title;
    void (*run)(Tally&);
    double total_limit;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"structure suites on builtins and their duals", structure_suites, 0},
        {"canonical bicrossproducts pass the hopf suite", canonical_bicrossproducts, 0},
        {"bicrossproduct conditions and perturbed coaction", bicross_conditions, 0},
        {"induced copairs and codoubles", codoubles, 0},
        {"braiding form, displayed and solved inverse", cqt_forms, 0},
        {"cocycles and twists", cocycles, 0},
        {"twists equal Heisenberg doubles", headline, 30},
        {"twists are comodule algebras", comodule_algebras, 0},
        {"classical reduction", classical_reduction, 0},
        {"double dual and mutations", dual_and_mutation, 0},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        Tally t;
        auto start = Clock::now();
        c.run(t);
        const double total = seconds_since(start);
        if (c.total_limit > 0 && total > c.total_limit) {
            std::ostringstream os;
            os << "total " << std::fixed << std::setprecision(2) << total << " s exceeds " << c.total_limit << " s";
            t.problems.push_back(os.str());
        }
        const bool ok = t.problems.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << std::setw(2) << index << " " << c.title << "  (" << std::fixed
                  << std::setprecision(2) << total << " s, slowest " << t.slowest << " s)" << std::endl;
        for (const auto& p : t.problems) std::cerr << "  criterion " << index << ": " << p << "\n";
    }
    return failed ? 1 : 0;
}
