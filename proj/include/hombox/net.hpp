#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hombox/rational.hpp"
#include "hombox/tensor.hpp"

namespace hombox {

// A tensor whose legs are addressed by name instead of position. Structure
// maps are attached by naming the legs they consume and produce, so a formula
// such as S(h_1)h_2 reads as split h, map h1 by S, join h1 and h2.
//
// Entries are kept sparse: intermediate products of several structure
// tensors are mostly zero even when the final collected tensor is dense.
class Net {
public:
    struct Leg {
        std::string name;
        std::size_t dim;
        std::string label;
    };

    Net();  // the scalar 1

    // Identity with legs "@name" (the basis input) and "name" (its live copy).
    static Net input(const std::string& name, std::size_t dim, const std::string& label = "");
    static Net inputs(const std::vector<std::pair<std::string, std::size_t>>& names);
    static Net constant(const Tensor& t, const std::vector<std::string>& names);
    static Net scalar(const Rational& c);

    // t has axes in... followed by out...; the in legs are consumed.
    Net apply(const Tensor& t, const std::vector<std::string>& in, const std::vector<std::string>& out) const;
    // m is an [output, input] matrix acting on one leg; the result keeps the
    // leg's name unless out is given.
    Net map(const std::string& leg, const Tensor& m, const std::string& out = "") const;
    Net split(const std::string& leg, const Tensor& comult, const std::string& left, const std::string& right) const;
    Net join(const std::string& a, const std::string& b, const Tensor& mult, const std::string& out) const;
    Net eval(const std::string& leg, const Tensor& covector) const;
    // Sums the diagonal of two legs of equal size (the pairing of a dual
    // coordinate with a primal one).
    Net pair(const std::string& a, const std::string& b) const;
    Net rename(const std::string& from, const std::string& to) const;

    // Contracts legs that share a name and keeps all others.
    Net operator*(const Net& o) const;
    Net operator+(const Net& o) const;
    Net operator-(const Net& o) const;
    Net scaled(const Rational& c) const;

    bool has(const std::string& leg) const;
    std::size_t dim(const std::string& leg) const;
    const std::vector<Leg>& legs() const { return legs_; }
    std::size_t nonzeros() const { return entries_.size(); }

    // Dense tensor with axes in the given order, which must list every leg.
    Tensor collect(const std::vector<std::string>& order) const;

private:
    std::size_t index_of(const std::string& leg) const;
    std::vector<std::uint64_t> strides() const;
    static Net contract(const Net& a, const Net& b);

    std::vector<Leg> legs_;
    std::vector<std::pair<std::uint64_t, Rational>> entries_;
};

}  // namespace hombox
