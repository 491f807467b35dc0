#include "hombox/report.hpp"

#include <sstream>

namespace hombox {

namespace {

std::string tuple_str(const std::vector<std::size_t>& idx) {
    std::string s = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + ")";
}

std::string slice_str(const Shape& shape, const std::vector<Rational>& values) {
    if (shape.empty()) return values.at(0).str();
    Tensor t(shape, {}, values);
    std::string s = "{";
    bool first = true;
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (t[f].is_zero()) continue;
        s += (first ? "" : ",") + tuple_str(t.unravel(f)) + ":" + t[f].str();
        first = false;
    }
    return s + "}";
}

}  // namespace

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
    std::size_t n = 0;
    for (const auto& v : verdicts) n += !v.passed();
    return n;
}

const Verdict* CheckReport::find(const std::string& law_id) const {
    for (const auto& v : verdicts)
        if (v.law_id == law_id) return &v;
    return nullptr;
}

const Verdict* CheckReport::first_failure() const {
    for (const auto& v : verdicts)
        if (!v.passed()) return &v;
    return nullptr;
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& n : other.notes) notes.push_back(n);
    for (auto v : other.verdicts) {
        v.law_id = prefix + v.law_id;
        verdicts.push_back(std::move(v));
    }
}

std::string format_verdict(const Verdict& v) {
    std::ostringstream os;
    os << "LAW " << v.law_id << " \"" << v.citation << "\" " << (v.passed() ? "PASS" : "FAIL");
    if (!v.passed()) {
        if (v.violations) os << " violations=" << v.violations;
        for (const auto& w : v.witnesses)
            os << " witness=" << tuple_str(w.index) << " lhs=" << slice_str(w.slice_shape, w.lhs)
               << " rhs=" << slice_str(w.slice_shape, w.rhs);
    }
    if (!v.note.empty()) os << " note=\"" << v.note << "\"";
    return os.str();
}

std::string CheckReport::format() const {
    std::ostringstream os;
    os << "SUITE " << suite << "\n";
    for (const auto& n : notes) os << "NOTE " << n << "\n";
    for (const auto& v : verdicts) os << format_verdict(v) << "\n";
    os << "RESULT " << (passed() ? "PASS" : "FAIL") << " " << (verdicts.size() - failures()) << "/" << verdicts.size()
       << "\n";
    return os.str();
}

LawViolation::LawViolation(const std::string& what, CheckReport report)
    : Error(what), report_(std::move(report)) {}

void require_pass(const CheckReport& report, const std::string& context) {
    if (const Verdict* v = report.first_failure())
        throw LawViolation(context + ": law " + v->law_id + " fails (" + v->citation + ")", report);
}

LawRecorder::LawRecorder(std::string suite, CheckOptions options) : options_(options) {
    report_.suite = std::move(suite);
}

void LawRecorder::compare(const std::string& id, const std::string& citation, const Tensor& lhs, const Tensor& rhs,
                          std::size_t input_axes) {
    Verdict v;
    v.law_id = id;
    v.citation = citation;
    if (lhs.shape() != rhs.shape() || input_axes > lhs.rank()) {
        v.status = Status::fail;
        v.note = "sides have different shapes";
        report_.verdicts.push_back(std::move(v));
        return;
    }
    Shape in(lhs.shape().begin(), lhs.shape().begin() + input_axes);
    Shape out(lhs.shape().begin() + input_axes, lhs.shape().end());
    std::size_t block = 1;
    for (auto d : out) block *= d;
    const std::size_t tuples = block ? lhs.size() / block : 0;
    Tensor index_space(in);
    for (std::size_t t = 0; t < tuples; ++t) {
        bool same = true;
        for (std::size_t k = 0; k < block && same; ++k) same = lhs[t * block + k] == rhs[t * block + k];
        if (same) continue;
        v.status = Status::fail;
        if (v.violations++ == 0 || options_.all_witnesses) {
            Witness w{index_space.unravel(t), out, {}, {}};
            for (std::size_t k = 0; k < block; ++k) {
                w.lhs.push_back(lhs[t * block + k]);
                w.rhs.push_back(rhs[t * block + k]);
            }
            v.witnesses.push_back(std::move(w));
        }
    }
    report_.verdicts.push_back(std::move(v));
}

void LawRecorder::compare(const std::string& id, const std::string& citation, const Net& lhs, const Net& rhs,
                          const std::vector<std::string>& order, std::size_t input_axes) {
    compare(id, citation, lhs.collect(order), rhs.collect(order), input_axes);
}

void LawRecorder::record(const std::string& id, const std::string& citation, bool ok, const std::string& note) {
    Verdict v;
    v.law_id = id;
    v.citation = citation;
    v.status = ok ? Status::pass : Status::fail;
    v.note = note;
    report_.verdicts.push_back(std::move(v));
}

void LawRecorder::note(const std::string& text) { report_.notes.push_back(text); }

void LawRecorder::merge(const CheckReport& other, const std::string& prefix) { report_.merge(other, prefix); }

}  // namespace hombox
