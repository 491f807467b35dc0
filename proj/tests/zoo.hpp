#pragma once

#include <map>
#include <string>
#include <vector>

#include "hombox/builtins.hpp"

namespace zoo {

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"k", "group-c2", "group-c3", "group-c3-inv", "sweedler4",
                                               "classical-sweedler4"};
    return n;
}

inline const hombox::HomHopfAlgebra& get(const std::string& name) {
    static std::map<std::string, hombox::HomHopfAlgebra> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, hombox::builtin(name)).first;
    return it->second;
}

inline hombox::HomHopfAlgebra tensor_hopf(const hombox::HomHopfAlgebra& a, const hombox::HomHopfAlgebra& h) {
    using namespace hombox;
    Carrier c = make_carrier(a.label() + "⊗" + h.label(), composite_basis(a.carrier().basis, h.carrier().basis),
                             kron(a.beta(), h.beta()));
    auto v = [](const Tensor& x, const Tensor& y) { return tensor_product(x, y).reshaped({x.size() * y.size()}); };
    return make_hopf(c, kron(a.mult(), h.mult()), v(a.unit(), h.unit()), kron(a.comult(), h.comult()),
                     v(a.counit(), h.counit()), kron(a.antipode, h.antipode));
}

}  // namespace zoo
