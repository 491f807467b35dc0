#pragma once

#include "hombox/net.hpp"
#include "hombox/structures.hpp"

namespace hombox::detail {

// The carrier A ⊗ H with α ⊗ β, first factor major.
inline Carrier composite_carrier(const Carrier& a, const Carrier& h, const std::string& construction) {
    Carrier c = make_carrier(a.label + "⊗" + h.label, composite_basis(a.basis, h.basis), kron(a.beta, h.beta));
    c.provenance.construction = construction;
    c.provenance.inputs = {a.label, h.label};
    c.provenance.factors = {a.label, h.label};
    return c;
}

// Collects a net whose legs come in (a, h) pairs into a tensor over the
// composite space, one axis per pair.
inline Tensor collect_pairs(const Net& n, const std::vector<std::string>& order, std::size_t da, std::size_t dh) {
    Tensor t = n.collect(order);
    return t.reshaped(Shape(order.size() / 2, da * dh));
}

inline Tensor kron_vector(const Tensor& a, const Tensor& b) {
    return tensor_product(a, b).reshaped({a.size() * b.size()});
}

}  // namespace hombox::detail
