#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hombox/rational.hpp"

namespace hombox {

using Shape = std::vector<std::size_t>;

// Dense row-major array of exact scalars. Each axis carries the label of the
// space it indexes; "X*" denotes the dual of "X" and "" matches anything.
class Tensor {
public:
    Tensor();  // rank-0 tensor holding 0
    explicit Tensor(Shape shape, std::vector<std::string> labels = {});
    Tensor(Shape shape, std::vector<std::string> labels, std::vector<Rational> entries);

    static Tensor scalar(const Rational& value);
    static Tensor identity(std::size_t n, const std::string& label = "");
    static Tensor vector(std::vector<Rational> entries, const std::string& label = "");
    static Tensor basis_vector(std::size_t n, std::size_t i, const std::string& label = "");
    static Tensor matrix(const std::vector<std::vector<Rational>>& rows, const std::string& label = "");

    std::size_t rank() const { return shape_.size(); }
    const Shape& shape() const { return shape_; }
    std::size_t dim(std::size_t axis) const { return shape_.at(axis); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<Rational>& entries() const { return entries_; }

    const Rational& operator[](std::size_t flat) const { return entries_[flat]; }
    Rational& operator[](std::size_t flat) { return entries_[flat]; }

    std::size_t offset(const std::vector<std::size_t>& index) const;
    std::vector<std::size_t> unravel(std::size_t flat) const;

    const Rational& at(const std::vector<std::size_t>& index) const { return entries_[offset(index)]; }
    Rational& at(const std::vector<std::size_t>& index) { return entries_[offset(index)]; }
    template <class... I>
    const Rational& operator()(I... i) const { return at({static_cast<std::size_t>(i)...}); }
    template <class... I>
    Rational& operator()(I... i) { return at({static_cast<std::size_t>(i)...}); }

    Tensor relabeled(std::vector<std::string> labels) const;
    Tensor reshaped(Shape shape, std::vector<std::string> labels = {}) const;

    bool is_zero() const;
    std::size_t nonzeros() const;
    // Matrix rows, for square-matrix helpers and printing.
    std::vector<std::vector<Rational>> rows() const;

    Tensor operator-() const;
    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    friend Tensor operator*(const Rational& c, const Tensor& a);

    // Exact entrywise equality; labels are not compared.
    friend bool operator==(const Tensor& a, const Tensor& b);
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

private:
    Shape shape_;
    std::vector<std::string> labels_;
    std::vector<Rational> entries_;
};

enum class LabelCheck { strict, skip };

bool labels_compatible(const std::string& a, const std::string& b);

Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                LabelCheck check = LabelCheck::strict);
Tensor permute(const Tensor& a, const std::vector<std::size_t>& perm);

// Matrices follow the [output, input] convention: (M v)_i = sum_j M[i,j] v_j.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor apply(const Tensor& m, const Tensor& v);
Tensor transpose(const Tensor& m);
Tensor mat_inverse(const Tensor& m);
Tensor mat_power(const Tensor& m, long long k);
bool is_invertible(const Tensor& m);

// Axis-by-axis Kronecker product of equal-rank tensors: axis i of the result
// has size a.dim(i) * b.dim(i) with a's index major.
Tensor kron(const Tensor& a, const Tensor& b);

}  // namespace hombox
