#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hombox/report.hpp"
#include "hombox/structures.hpp"

namespace hombox {

using AnyObject = std::variant<HomAlgebra, HomBialgebra, HomHopfAlgebra>;

// One algebra file: the object, the field it lives over and the reports
// that were recorded with it, oldest first.
struct AlgebraDocument {
    std::string name;
    std::string field = "Q";
    AnyObject object;
    std::vector<CheckReport> reports;
};

// 0 for "Q", p for "Fp:<p>". ParseError otherwise.
std::uint32_t parse_field(const std::string& tag);

const Carrier& carrier_of(const AnyObject& o);
const char* level_name(const AnyObject& o);

// JSON with keys name, field, dim, basis, mult, unit, beta, optionally
// comult, counit, antipode and metadata. Sparse tensors are lists of
// [i, j, k, "p/q"]; scalars are strings. Objects are not law-checked here.
// Throws ParseError (with line or field), DimensionError or BadScalar.
AlgebraDocument parse_algebra_file(const std::string& text);
// Canonical form: fixed key order, sparse entries in row-major order.
std::string serialize_algebra_file(const AlgebraDocument& doc);

AlgebraDocument read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const AlgebraDocument& doc);

}  // namespace hombox
