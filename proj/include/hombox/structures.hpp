#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hombox/tensor.hpp"

namespace hombox {

// Where an object came from; serialized with it so runs can be rebuilt.
struct Provenance {
    std::string construction;           // empty for hand-written or builtin data
    std::vector<std::string> inputs;    // names of the input objects
    std::optional<long long> n;         // integer parameter of the canonical formulas
    std::vector<std::string> factors;   // factor labels of a composite space, major first
    bool unverified = false;            // preconditions were skipped
    bool derived_antipode = false;      // antipode supplied by S^{-1}, not by a displayed formula
};

// The underlying space: its label, basis names, and the structure
// automorphism (alpha, beta, lambda, ...) as an [output, input] matrix.
struct Carrier {
    std::string label;
    std::vector<std::string> basis;
    Tensor beta;
    Provenance provenance;

    std::size_t dim() const { return basis.size(); }
};

Carrier make_carrier(std::string label, std::vector<std::string> basis, Tensor beta);
std::vector<std::string> default_basis(std::size_t dim, const std::string& prefix = "e");
// Basis names of a composite space in lexicographic order, first factor major.
std::vector<std::string> composite_basis(const std::vector<std::string>& a, const std::vector<std::string>& b);
std::string dual_label(const std::string& label);

struct HomAlgebra {
    Carrier carrier;
    Tensor mult;  // [left, right, output]
    Tensor unit;  // [dim]

    std::size_t dim() const { return carrier.dim(); }
    const Tensor& beta() const { return carrier.beta; }
    const std::string& label() const { return carrier.label; }
};

struct HomCoalgebra {
    Carrier carrier;
    Tensor comult;  // [input, left, right]
    Tensor counit;  // [dim]

    std::size_t dim() const { return carrier.dim(); }
    const Tensor& beta() const { return carrier.beta; }
    const std::string& label() const { return carrier.label; }
};

struct HomBialgebra {
    HomAlgebra algebra;
    HomCoalgebra coalgebra;

    std::size_t dim() const { return algebra.dim(); }
    const Tensor& beta() const { return algebra.carrier.beta; }
    const std::string& label() const { return algebra.carrier.label; }
    const Carrier& carrier() const { return algebra.carrier; }
    const Tensor& mult() const { return algebra.mult; }
    const Tensor& unit() const { return algebra.unit; }
    const Tensor& comult() const { return coalgebra.comult; }
    const Tensor& counit() const { return coalgebra.counit; }
};

struct HomHopfAlgebra {
    HomBialgebra bialgebra;
    Tensor antipode;

    std::size_t dim() const { return bialgebra.dim(); }
    const Tensor& beta() const { return bialgebra.beta(); }
    const std::string& label() const { return bialgebra.label(); }
    const Carrier& carrier() const { return bialgebra.carrier(); }
    const Tensor& mult() const { return bialgebra.mult(); }
    const Tensor& unit() const { return bialgebra.unit(); }
    const Tensor& comult() const { return bialgebra.comult(); }
    const Tensor& counit() const { return bialgebra.counit(); }
    const HomAlgebra& algebra() const { return bialgebra.algebra; }
    const HomCoalgebra& coalgebra() const { return bialgebra.coalgebra; }
};

HomBialgebra make_bialgebra(Carrier carrier, Tensor mult, Tensor unit, Tensor comult, Tensor counit);
HomHopfAlgebra make_hopf(Carrier carrier, Tensor mult, Tensor unit, Tensor comult, Tensor counit, Tensor antipode);
// Sets the provenance on both halves of a bialgebra.
void set_provenance(HomBialgebra& b, const Provenance& p);
void set_provenance(HomHopfAlgebra& h, const Provenance& p);

// Throws DimMismatch unless every tensor has the shape its dimension implies.
void validate(const HomAlgebra& a);
void validate(const HomCoalgebra& c);
void validate(const HomBialgebra& b);
void validate(const HomHopfAlgebra& h);

enum class Side { left, right };
const char* side_name(Side s);

// Right actions are tensors (carrier-in, actor, carrier-out); left actions
// are (actor, carrier-in, carrier-out).
struct ActionMap {
    Side side;
    std::string actor;
    std::string carrier;
    Tensor carrier_beta;
    Tensor tensor;
};

// Coactions list the carrier input first and then the outputs in the written
// order: a left coaction m -> m[-1] (x) m[0] is (carrier-in, coactor, carrier),
// a right coaction m -> m(0) (x) m(1) is (carrier-in, carrier, coactor).
struct CoactionMap {
    Side side;
    std::string coactor;
    std::string carrier;
    Tensor carrier_beta;
    Tensor tensor;
};

}  // namespace hombox
