#include "hombox/builtins.hpp"

#include "hombox/constructions.hpp"
#include "hombox/errors.hpp"
#include "hombox/laws.hpp"

namespace hombox {

HomHopfAlgebra group_algebra(std::size_t n) {
    Tensor m({n, n, n}), D({n, n, n}), S({n, n});
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) m(i, j, (i + j) % n) = 1;
        D(i, i, i) = 1;
        S((n - i) % n, i) = 1;
    }
    Tensor unit = Tensor::basis_vector(n, 0);
    Tensor counit = Tensor::vector(std::vector<Rational>(n, Rational(1)));
    const std::string label = n == 1 ? "k" : "kC" + std::to_string(n);
    return make_hopf(make_carrier(label, basis, Tensor::identity(n)), m, unit, D, counit, S);
}

HomHopfAlgebra classical_sweedler4() {
    // basis index 2b + a for g^a x^b
    Tensor m({4, 4, 4});
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    if (b1 + b2 > 1) continue;
                    // g^a1 x^b1 g^a2 x^b2 = (−1)^{b1 a2} g^{a1+a2} x^{b1+b2}
                    int sign = (b1 * a2) % 2 ? -1 : 1;
                    m(2 * b1 + a1, 2 * b2 + a2, 2 * (b1 + b2) + (a1 + a2) % 2) = sign;
                }
    Tensor D({4, 4, 4});
    D(0, 0, 0) = 1;
    D(1, 1, 1) = 1;
    D(2, 2, 0) = 1;
    D(2, 1, 2) = 1;
    D(3, 3, 1) = 1;
    D(3, 0, 3) = 1;
    Tensor S({4, 4});
    S(0, 0) = 1;
    S(1, 1) = 1;
    S(3, 2) = -1;
    S(2, 3) = 1;
    return make_hopf(make_carrier("H4", {"1", "g", "x", "gx"}, Tensor::identity(4)), m, Tensor::basis_vector(4, 0),
                     D, Tensor::vector({1, 1, 0, 0}), S);
}

namespace {

HomHopfAlgebra named(HomHopfAlgebra h, const std::string& label, const std::string& name) {
    h.bialgebra.algebra.carrier.label = label;
    h.bialgebra.coalgebra.carrier.label = label;
    Provenance p;
    p.construction = "builtin";
    p.inputs = {name};
    HomHopfAlgebra r = make_hopf(make_carrier(label, h.carrier().basis, h.beta()), h.mult(), h.unit(), h.comult(),
                                 h.counit(), h.antipode);
    set_provenance(r, p);
    return r;
}

HomHopfAlgebra raw(const std::string& name, const Rational& lambda) {
    if (name == "k") return named(group_algebra(1), "k", name);
    if (name == "group-c2") return named(group_algebra(2), "kC2", name);
    if (name == "group-c3") return named(group_algebra(3), "kC3", name);
    if (name == "group-c3-inv") {
        HomHopfAlgebra c3 = group_algebra(3);
        return named(yau_twist(c3, c3.antipode), "kC3inv", name);
    }
    if (name == "classical-sweedler4") return named(classical_sweedler4(), "H4", name);
    if (name == "sweedler4") {
        if (lambda.is_zero()) throw BadParam("sweedler4 needs a nonzero lambda");
        Tensor a = Tensor::identity(4);
        a(2, 2) = lambda;
        a(3, 3) = lambda;
        HomHopfAlgebra h = named(yau_twist(classical_sweedler4(), a), "H4", name);
        auto p = h.carrier().provenance;
        p.inputs = {name + "(" + lambda.str() + ")"};
        set_provenance(h, p);
        return h;
    }
    const std::string prefix = "dual-of:";
    if (name.rfind(prefix, 0) == 0) {
        HomHopfAlgebra inner = builtin(name.substr(prefix.size()), lambda);
        HomHopfAlgebra d = dual_hopf(inner);
        Provenance p;
        p.construction = "builtin";
        p.inputs = {name};
        set_provenance(d, p);
        return d;
    }
    throw UnknownBuiltin("unknown builtin " + name);
}

}  // namespace

HomHopfAlgebra builtin(const std::string& name, const Rational& lambda) {
    HomHopfAlgebra h = raw(name, lambda);
    require_pass(check_structure(h, Suite::hopf), "builtin " + name);
    return h;
}

std::vector<std::string> builtin_names() {
    return {"k", "group-c2", "group-c3", "group-c3-inv", "sweedler4", "classical-sweedler4"};
}

}  // namespace hombox
