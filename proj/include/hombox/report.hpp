#pragma once

#include <string>
#include <vector>

#include "hombox/errors.hpp"
#include "hombox/net.hpp"
#include "hombox/tensor.hpp"

namespace hombox {

enum class Status { pass, fail };

struct Witness {
    std::vector<std::size_t> index;  // basis input tuple
    Shape slice_shape;               // shape of the output slice
    std::vector<Rational> lhs, rhs;
};

struct Verdict {
    std::string law_id;
    std::string citation;
    Status status = Status::pass;
    std::size_t violations = 0;  // number of failing input tuples
    std::vector<Witness> witnesses;
    std::string note;

    bool passed() const { return status == Status::pass; }
};

struct CheckReport {
    std::string suite;
    std::vector<std::string> notes;
    std::vector<Verdict> verdicts;

    bool passed() const;
    std::size_t failures() const;
    const Verdict* find(const std::string& law_id) const;
    const Verdict* first_failure() const;
    // Appends another report's verdicts, prefixing their ids when asked.
    void merge(const CheckReport& other, const std::string& prefix = "");
    std::string format() const;
};

std::string format_verdict(const Verdict& v);

struct CheckOptions {
    bool all_witnesses = false;
};

class LawViolation : public Error {
public:
    LawViolation(const std::string& what, CheckReport report);
    const CheckReport& report() const { return report_; }

private:
    CheckReport report_;
};

// Throws LawViolation carrying the report unless every verdict passed.
void require_pass(const CheckReport& report, const std::string& context);

// Collects verdicts for one suite. A law compares two tensors whose leading
// input_axes axes index the basis inputs; the remaining axes are the value.
class LawRecorder {
public:
    explicit LawRecorder(std::string suite, CheckOptions options = {});

    void compare(const std::string& id, const std::string& citation, const Tensor& lhs, const Tensor& rhs,
                 std::size_t input_axes);
    void compare(const std::string& id, const std::string& citation, const Net& lhs, const Net& rhs,
                 const std::vector<std::string>& order, std::size_t input_axes);
    void record(const std::string& id, const std::string& citation, bool ok, const std::string& note = "");
    void note(const std::string& text);
    void merge(const CheckReport& other, const std::string& prefix = "");

    const CheckReport& report() const { return report_; }
    CheckReport take() { return std::move(report_); }

private:
    CheckOptions options_;
    CheckReport report_;
};

}  // namespace hombox
