#include "hombox/structures.hpp"

#include "hombox/errors.hpp"

namespace hombox {

namespace {

void expect_shape(const Tensor& t, const Shape& shape, const std::string& what) {
    if (t.shape() != shape) {
        std::string want, got;
        for (auto d : shape) want += " " + std::to_string(d);
        for (auto d : t.shape()) got += " " + std::to_string(d);
        throw DimMismatch(what + " has shape [" + got + " ] but the dimension implies [" + want + " ]");
    }
}

void validate_carrier(const Carrier& c) {
    if (c.dim() == 0) throw DimMismatch("carrier " + c.label + " has dimension 0");
    expect_shape(c.beta, {c.dim(), c.dim()}, "automorphism of " + c.label);
}

}  // namespace

Carrier make_carrier(std::string label, std::vector<std::string> basis, Tensor beta) {
    Carrier c;
    c.label = std::move(label);
    c.basis = std::move(basis);
    c.beta = beta.relabeled({c.label, c.label});
    return c;
}

std::vector<std::string> default_basis(std::size_t dim, const std::string& prefix) {
    std::vector<std::string> b;
    for (std::size_t i = 0; i < dim; ++i) b.push_back(prefix + std::to_string(i));
    return b;
}

std::vector<std::string> composite_basis(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> r;
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x + "⊗" + y);
    return r;
}

std::string dual_label(const std::string& label) {
    if (label.size() > 1 && label.back() == '*' && label.front() != '(') return label.substr(0, label.size() - 1);
    if (label.size() > 3 && label.front() == '(' && label.substr(label.size() - 2) == ")*")
        return label.substr(1, label.size() - 3);
    if (label.find("⊗") != std::string::npos) return "(" + label + ")*";
    return label + "*";
}

HomBialgebra make_bialgebra(Carrier carrier, Tensor mult, Tensor unit, Tensor comult, Tensor counit) {
    const auto& l = carrier.label;
    HomBialgebra b{HomAlgebra{carrier, mult.relabeled({l, l, l}), unit.relabeled({l})},
                   HomCoalgebra{carrier, comult.relabeled({l, l, l}), counit.relabeled({dual_label(l)})}};
    validate(b);
    return b;
}

HomHopfAlgebra make_hopf(Carrier carrier, Tensor mult, Tensor unit, Tensor comult, Tensor counit, Tensor antipode) {
    const auto l = carrier.label;
    HomHopfAlgebra h{make_bialgebra(std::move(carrier), std::move(mult), std::move(unit), std::move(comult),
                                    std::move(counit)),
                     antipode.relabeled({l, l})};
    validate(h);
    return h;
}

void set_provenance(HomBialgebra& b, const Provenance& p) {
    b.algebra.carrier.provenance = p;
    b.coalgebra.carrier.provenance = p;
}

void set_provenance(HomHopfAlgebra& h, const Provenance& p) { set_provenance(h.bialgebra, p); }

void validate(const HomAlgebra& a) {
    validate_carrier(a.carrier);
    const auto d = a.dim();
    expect_shape(a.mult, {d, d, d}, "multiplication of " + a.label());
    expect_shape(a.unit, {d}, "unit of " + a.label());
}

void validate(const HomCoalgebra& c) {
    validate_carrier(c.carrier);
    const auto d = c.dim();
    expect_shape(c.comult, {d, d, d}, "comultiplication of " + c.label());
    expect_shape(c.counit, {d}, "counit of " + c.label());
}

void validate(const HomBialgebra& b) {
    validate(b.algebra);
    validate(b.coalgebra);
    if (b.algebra.dim() != b.coalgebra.dim()) throw DimMismatch("algebra and coalgebra dimensions differ");
    if (b.algebra.beta() != b.coalgebra.beta()) throw DimMismatch("algebra and coalgebra automorphisms differ");
}

void validate(const HomHopfAlgebra& h) {
    validate(h.bialgebra);
    expect_shape(h.antipode, {h.dim(), h.dim()}, "antipode of " + h.label());
}

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

}  // namespace hombox
