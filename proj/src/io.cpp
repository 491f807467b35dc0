#include "hombox/io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hombox/errors.hpp"
#include "json.hpp"

namespace hombox {

using Json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kKeys = {"name", "field", "dim", "basis", "mult", "unit", "comult",
                                     "counit", "beta", "antipode", "metadata"};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ParseError("field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) field_error(key, "missing");
    return *it;
}

Rational scalar(const Json& v, const std::string& field) {
    if (!v.is_string()) field_error(field, "scalars must be strings, got " + v.dump());
    Rational r = Rational::parse(v.get<std::string>());
    if (!field_modulus()) return r;
    try {
        return r.canonical();
    } catch (const DivisionByZero&) {
        throw BadScalar("field '" + field + "': " + v.get<std::string>() + " has no value mod " +
                        std::to_string(field_modulus()));
    }
}

std::size_t index(const Json& v, std::size_t bound, const std::string& field) {
    if (!v.is_number_integer()) field_error(field, "indices must be integers, got " + v.dump());
    long long i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
        throw DimensionError("field '" + field + "': index " + std::to_string(i) + " outside 0.." +
                             std::to_string(bound - 1));
    return static_cast<std::size_t>(i);
}

Tensor sparse3(const Json& j, std::size_t d, const std::string& field) {
    if (!j.is_array()) field_error(field, "expected a list of [i, j, k, scalar] entries");
    Tensor t({d, d, d});
    std::set<std::size_t> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const Json& row = j[e];
        const std::string where = field + "[" + std::to_string(e) + "]";
        if (!row.is_array() || row.size() != 4) field_error(where, "expected [i, j, k, scalar]");
        std::size_t a = index(row[0], d, where), b = index(row[1], d, where), c = index(row[2], d, where);
        std::size_t flat = (a * d + b) * d + c;
        if (!seen.insert(flat).second) field_error(where, "duplicate entry");
        t[flat] = scalar(row[3], where);
    }
    return t;
}

Tensor dense_vector(const Json& j, std::size_t d, const std::string& field) {
    if (!j.is_array()) field_error(field, "expected a list of scalars");
    if (j.size() != d)
        throw DimensionError("field '" + field + "': " + std::to_string(j.size()) + " entries for dim " +
                             std::to_string(d));
    std::vector<Rational> v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(scalar(j[i], field + "[" + std::to_string(i) + "]"));
    return Tensor({d}, {}, v);
}

Tensor dense_matrix(const Json& j, std::size_t d, const std::string& field) {
    if (!j.is_array()) field_error(field, "expected a list of rows");
    if (j.size() != d)
        throw DimensionError("field '" + field + "': " + std::to_string(j.size()) + " rows for dim " +
                             std::to_string(d));
    std::vector<Rational> v;
    for (std::size_t r = 0; r < d; ++r) {
        const std::string where = field + "[" + std::to_string(r) + "]";
        if (!j[r].is_array()) field_error(where, "expected a row");
        if (j[r].size() != d)
            throw DimensionError("field '" + where + "': row of length " + std::to_string(j[r].size()) +
                                 " for dim " + std::to_string(d));
        for (std::size_t c = 0; c < d; ++c) v.push_back(scalar(j[r][c], where));
    }
    return Tensor({d, d}, {}, v);
}

Json sparse_json(const Tensor& t) {
    Json a = Json::array();
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        auto idx = t.unravel(f);
        a.push_back(Json::array({idx[0], idx[1], idx[2], t[f].str()}));
    }
    return a;
}

Json vector_json(const Tensor& t) {
    Json a = Json::array();
    for (std::size_t i = 0; i < t.size(); ++i) a.push_back(t[i].str());
    return a;
}

Json matrix_json(const Tensor& t) {
    Json a = Json::array();
    for (const auto& row : t.rows()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.str());
        a.push_back(r);
    }
    return a;
}

std::vector<Rational> scalars(const Json& j, const std::string& field) {
    std::vector<Rational> v;
    for (const auto& x : j) v.push_back(scalar(x, field));
    return v;
}

Json report_json(const CheckReport& r) {
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json w = Json::array();
        for (const auto& x : v.witnesses) {
            Json lhs = Json::array(), rhs = Json::array();
            for (const auto& s : x.lhs) lhs.push_back(s.str());
            for (const auto& s : x.rhs) rhs.push_back(s.str());
            w.push_back(Json{{"index", x.index}, {"slice_shape", x.slice_shape}, {"lhs", lhs}, {"rhs", rhs}});
        }
        Json j{{"law_id", v.law_id}, {"citation", v.citation}, {"status", v.passed() ? "PASS" : "FAIL"},
               {"violations", v.violations}};
        if (!w.empty()) j["witnesses"] = w;
        if (!v.note.empty()) j["note"] = v.note;
        verdicts.push_back(j);
    }
    return Json{{"suite", r.suite}, {"notes", r.notes}, {"verdicts", verdicts}};
}

CheckReport report_from_json(const Json& j) {
    CheckReport r;
    try {
        r.suite = j.at("suite").get<std::string>();
        r.notes = j.value("notes", std::vector<std::string>{});
        for (const auto& v : j.at("verdicts")) {
            Verdict x;
            x.law_id = v.at("law_id").get<std::string>();
            x.citation = v.at("citation").get<std::string>();
            const std::string st = v.at("status").get<std::string>();
            if (st != "PASS" && st != "FAIL") field_error("metadata.reports", "status must be PASS or FAIL");
            x.status = st == "PASS" ? Status::pass : Status::fail;
            x.violations = v.value("violations", std::size_t{0});
            x.note = v.value("note", std::string{});
            if (v.contains("witnesses"))
                for (const auto& w : v.at("witnesses"))
                    x.witnesses.push_back(Witness{w.at("index").get<std::vector<std::size_t>>(),
                                                  w.at("slice_shape").get<Shape>(),
                                                  scalars(w.at("lhs"), "metadata.reports"),
                                                  scalars(w.at("rhs"), "metadata.reports")});
            r.verdicts.push_back(std::move(x));
        }
    } catch (const Json::exception& e) {
        field_error("metadata.reports", e.what());
    }
    return r;
}

Provenance provenance_from_json(const Json& j) {
    Provenance p;
    try {
        p.construction = j.value("construction", std::string{});
        p.inputs = j.value("inputs", std::vector<std::string>{});
        if (j.contains("n")) p.n = j.at("n").get<long long>();
        p.factors = j.value("factors", std::vector<std::string>{});
        p.unverified = j.value("unverified", false);
        p.derived_antipode = j.value("derived_antipode", false);
    } catch (const Json::exception& e) {
        field_error("metadata.provenance", e.what());
    }
    return p;
}

Json provenance_json(const Provenance& p) {
    Json j = Json::object();
    if (!p.construction.empty()) j["construction"] = p.construction;
    if (!p.inputs.empty()) j["inputs"] = p.inputs;
    if (p.n) j["n"] = *p.n;
    if (!p.factors.empty()) j["factors"] = p.factors;
    if (p.unverified) j["unverified"] = true;
    if (p.derived_antipode) j["derived_antipode"] = true;
    return j;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
    return line;
}

// Top-level keys one per line, list entries one per line, rows compact.
std::string pretty(const Json& doc) {
    std::ostringstream os;
    os << "{\n";
    std::size_t k = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++k) {
        os << "  " << Json(it.key()).dump() << ": ";
        const Json& v = it.value();
        const bool nested = v.is_array() && !v.empty() && v[0].is_array();
        if (nested) {
            os << "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) os << "    " << v[i].dump() << (i + 1 < v.size() ? ",\n" : "\n");
            os << "  ]";
        } else if (it.key() == "metadata") {
            std::string m = v.dump(2);
            for (std::size_t at = m.find('\n'); at != std::string::npos; at = m.find('\n', at + 3))
                m.replace(at, 1, "\n  ");
            os << m;
        } else {
            os << v.dump();
        }
        os << (k + 1 < doc.size() ? ",\n" : "\n");
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::uint32_t parse_field(const std::string& tag) {
    if (tag == "Q") return 0;
    if (tag.rfind("Fp:", 0) == 0) {
        const std::string p = tag.substr(3);
        if (!p.empty() && p.size() < 11 && p.find_first_not_of("0123456789") == std::string::npos) {
            unsigned long long v = std::stoull(p);
            if (v < (1ull << 31) && is_prime(v)) return static_cast<std::uint32_t>(v);
        }
    }
    field_error("field", "expected \"Q\" or \"Fp:<prime>\", got \"" + tag + "\"");
}

const Carrier& carrier_of(const AnyObject& o) {
    return std::visit(
        [](const auto& x) -> const Carrier& {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HomAlgebra>) return x.carrier;
            else return x.carrier();
        },
        o);
}

const char* level_name(const AnyObject& o) {
    switch (o.index()) {
        case 0: return "algebra";
        case 1: return "bialgebra";
        default: return "hopf";
    }
}

AlgebraDocument parse_algebra_file(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError("line 1: the file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!kKeys.count(it.key())) field_error(it.key(), "unknown key");

    AlgebraDocument doc;
    const Json& name = require(j, "name");
    if (!name.is_string()) field_error("name", "expected a string");
    doc.name = name.get<std::string>();
    const Json& field = require(j, "field");
    if (!field.is_string()) field_error("field", "expected a string");
    doc.field = field.get<std::string>();
    const std::uint32_t p = parse_field(doc.field);
    std::optional<FieldScope> scope;
    if (p) scope.emplace(p);

    const Json& dim = require(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) field_error("dim", "expected a positive integer");
    const auto d = static_cast<std::size_t>(dim.get<long long>());
    const Json& basis = require(j, "basis");
    if (!basis.is_array()) field_error("basis", "expected a list of names");
    if (basis.size() != d)
        throw DimensionError("field 'basis': " + std::to_string(basis.size()) + " names for dim " +
                             std::to_string(d));
    std::vector<std::string> names;
    for (const auto& b : basis) {
        if (!b.is_string()) field_error("basis", "names must be strings");
        names.push_back(b.get<std::string>());
    }

    std::string label = doc.name;
    Provenance prov;
    if (auto m = j.find("metadata"); m != j.end()) {
        if (!m->is_object()) field_error("metadata", "expected an object");
        if (auto l = m->find("label"); l != m->end()) {
            if (!l->is_string()) field_error("metadata.label", "expected a string");
            label = l->get<std::string>();
        }
        if (auto pv = m->find("provenance"); pv != m->end()) prov = provenance_from_json(*pv);
        if (auto rs = m->find("reports"); rs != m->end()) {
            if (!rs->is_array()) field_error("metadata.reports", "expected a list");
            for (const auto& r : *rs) doc.reports.push_back(report_from_json(r));
        }
    }

    Carrier c = make_carrier(label, names, dense_matrix(require(j, "beta"), d, "beta"));
    c.provenance = prov;
    Tensor mult = sparse3(require(j, "mult"), d, "mult");
    Tensor unit = dense_vector(require(j, "unit"), d, "unit");
    const bool has_comult = j.contains("comult"), has_counit = j.contains("counit");
    if (has_comult != has_counit) field_error(has_comult ? "counit" : "comult", "comult and counit come together");
    if (!has_comult) {
        if (j.contains("antipode")) field_error("antipode", "an antipode needs comult and counit");
        HomAlgebra a{c, mult.relabeled({label, label, label}), unit.relabeled({label})};
        validate(a);
        doc.object = a;
        return doc;
    }
    Tensor comult = sparse3(require(j, "comult"), d, "comult");
    Tensor counit = dense_vector(require(j, "counit"), d, "counit");
    if (j.contains("antipode"))
        doc.object = make_hopf(c, mult, unit, comult, counit, dense_matrix(j["antipode"], d, "antipode"));
    else
        doc.object = make_bialgebra(c, mult, unit, comult, counit);
    return doc;
}

std::string serialize_algebra_file(const AlgebraDocument& doc) {
    std::optional<FieldScope> scope;
    if (std::uint32_t p = parse_field(doc.field)) scope.emplace(p);
    const Carrier& c = carrier_of(doc.object);
    Json j;
    j["name"] = doc.name;
    j["field"] = doc.field;
    j["dim"] = c.dim();
    j["basis"] = c.basis;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HomAlgebra>) {
                j["mult"] = sparse_json(x.mult);
                j["unit"] = vector_json(x.unit);
            } else {
                j["mult"] = sparse_json(x.mult());
                j["unit"] = vector_json(x.unit());
                j["comult"] = sparse_json(x.comult());
                j["counit"] = vector_json(x.counit());
            }
            j["beta"] = matrix_json(c.beta);
            if constexpr (std::is_same_v<T, HomHopfAlgebra>) j["antipode"] = matrix_json(x.antipode);
        },
        doc.object);
    Json meta = Json::object();
    meta["label"] = c.label;
    meta["level"] = level_name(doc.object);
    Json pv = provenance_json(c.provenance);
    if (!pv.empty()) meta["provenance"] = pv;
    if (!doc.reports.empty()) {
        Json rs = Json::array();
        for (const auto& r : doc.reports) rs.push_back(report_json(r));
        meta["reports"] = rs;
    }
    j["metadata"] = meta;
    return pretty(j);
}

AlgebraDocument read_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_algebra_file(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const DimensionError& e) {
        throw DimensionError(path + ": " + e.what());
    }
}

void write_algebra_file(const std::string& path, const AlgebraDocument& doc) {
    const std::string text = serialize_algebra_file(doc);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace hombox
