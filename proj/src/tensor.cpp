#include "hombox/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hombox/errors.hpp"

namespace hombox {

namespace {

std::size_t product(const Shape& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> strides_of(const Shape& s) {
    std::vector<std::size_t> st(s.size(), 1);
    for (std::size_t i = s.size(); i-- > 1;) st[i - 1] = st[i] * s[i];
    return st;
}

std::string shape_str(const Shape& s) {
    std::string r = "[";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "]";
}

void require_square(const Tensor& m, const char* op) {
    if (m.rank() != 2 || m.dim(0) != m.dim(1))
        throw AxisMismatch(std::string(op) + " needs a square matrix, got shape " + shape_str(m.shape()));
}

}  // namespace

Tensor::Tensor() : entries_(1) {}

Tensor::Tensor(Shape shape, std::vector<std::string> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)), entries_(product(shape_)) {
    if (labels_.empty()) labels_.assign(shape_.size(), "");
    if (labels_.size() != shape_.size()) throw AxisMismatch("label count does not match rank");
}

Tensor::Tensor(Shape shape, std::vector<std::string> labels, std::vector<Rational> entries)
    : Tensor(std::move(shape), std::move(labels)) {
    if (entries.size() != entries_.size())
        throw AxisMismatch("entry count " + std::to_string(entries.size()) + " does not match shape " +
                           shape_str(shape_));
    entries_ = std::move(entries);
}

Tensor Tensor::scalar(const Rational& value) {
    Tensor t;
    t.entries_[0] = value;
    return t;
}

Tensor Tensor::identity(std::size_t n, const std::string& label) {
    Tensor t({n, n}, {label, label});
    for (std::size_t i = 0; i < n; ++i) t(i, i) = 1;
    return t;
}

Tensor Tensor::vector(std::vector<Rational> entries, const std::string& label) {
    std::size_t n = entries.size();
    return Tensor({n}, {label}, std::move(entries));
}

Tensor Tensor::basis_vector(std::size_t n, std::size_t i, const std::string& label) {
    Tensor t({n}, {label});
    t(i) = 1;
    return t;
}

Tensor Tensor::matrix(const std::vector<std::vector<Rational>>& rows, const std::string& label) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Tensor t({r, c}, {label, label});
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw AxisMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) t(i, j) = rows[i][j];
    }
    return t;
}

std::size_t Tensor::offset(const std::vector<std::size_t>& index) const {
    if (index.size() != shape_.size())
        throw AxisMismatch("index of rank " + std::to_string(index.size()) + " into tensor of rank " +
                           std::to_string(shape_.size()));
    std::size_t off = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] >= shape_[i]) throw AxisMismatch("index out of range on axis " + std::to_string(i));
        off = off * shape_[i] + index[i];
    }
    return off;
}

std::vector<std::size_t> Tensor::unravel(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t i = shape_.size(); i-- > 0;) {
        idx[i] = flat % shape_[i];
        flat /= shape_[i];
    }
    return idx;
}

Tensor Tensor::relabeled(std::vector<std::string> labels) const {
    if (labels.size() != shape_.size()) throw AxisMismatch("label count does not match rank");
    Tensor t = *this;
    t.labels_ = std::move(labels);
    return t;
}

Tensor Tensor::reshaped(Shape shape, std::vector<std::string> labels) const {
    if (product(shape) != entries_.size())
        throw AxisMismatch("cannot reshape " + shape_str(shape_) + " to " + shape_str(shape));
    return Tensor(std::move(shape), std::move(labels), entries_);
}

bool Tensor::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::size_t Tensor::nonzeros() const {
    return std::count_if(entries_.begin(), entries_.end(), [](const Rational& r) { return !r.is_zero(); });
}

std::vector<std::vector<Rational>> Tensor::rows() const {
    if (rank() != 2) throw AxisMismatch("rows() needs a matrix");
    std::vector<std::vector<Rational>> r(shape_[0], std::vector<Rational>(shape_[1]));
    for (std::size_t i = 0; i < shape_[0]; ++i)
        for (std::size_t j = 0; j < shape_[1]; ++j) r[i][j] = entries_[i * shape_[1] + j];
    return r;
}

Tensor Tensor::operator-() const {
    Tensor t = *this;
    for (auto& e : t.entries_) e = -e;
    return t;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.shape_ != b.shape_) throw AxisMismatch("adding tensors of shapes " + shape_str(a.shape_) + " and " +
                                                 shape_str(b.shape_));
    Tensor t = a;
    for (std::size_t i = 0; i < t.size(); ++i) t.entries_[i] += b.entries_[i];
    return t;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

Tensor operator*(const Rational& c, const Tensor& a) {
    Tensor t = a;
    for (auto& e : t.entries_) e *= c;
    return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.shape_ != b.shape_) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.entries_[i] != b.entries_[i]) return false;
    return true;
}

bool labels_compatible(const std::string& a, const std::string& b) {
    if (a.empty() || b.empty() || a == b) return true;
    auto dual_of = [](const std::string& x, const std::string& y) { return x == y + "*" || x == "(" + y + ")*"; };
    return dual_of(a, b) || dual_of(b, a);
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    Shape shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    Tensor t(shape, labels);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) t[i * b.size() + j] = a[i] * b[j];
    }
    return t;
}

Tensor contract(const Tensor& a, const Tensor& b, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                LabelCheck check) {
    std::vector<bool> a_paired(a.rank()), b_paired(b.rank());
    for (auto [i, j] : pairs) {
        if (i >= a.rank() || j >= b.rank()) throw AxisMismatch("contracted axis out of range");
        if (a_paired[i] || b_paired[j]) throw AxisMismatch("axis contracted twice");
        if (a.dim(i) != b.dim(j))
            throw AxisMismatch("contracting axes of sizes " + std::to_string(a.dim(i)) + " and " +
                               std::to_string(b.dim(j)));
        if (check == LabelCheck::strict && !labels_compatible(a.labels()[i], b.labels()[j]))
            throw AxisMismatch("contracting incompatible spaces " + a.labels()[i] + " and " + b.labels()[j]);
        a_paired[i] = b_paired[j] = true;
    }
    Shape shape;
    std::vector<std::string> labels;
    std::vector<std::size_t> a_free, b_free;
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!a_paired[i]) {
            a_free.push_back(i);
            shape.push_back(a.dim(i));
            labels.push_back(a.labels()[i]);
        }
    for (std::size_t j = 0; j < b.rank(); ++j)
        if (!b_paired[j]) {
            b_free.push_back(j);
            shape.push_back(b.dim(j));
            labels.push_back(b.labels()[j]);
        }
    Tensor out(shape, labels);
    auto out_st = strides_of(shape);
    std::size_t b_base = a_free.size();

    // Group b's nonzeros by the values of its paired axes.
    std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_key;
    for (std::size_t f = 0; f < b.size(); ++f) {
        if (b[f].is_zero()) continue;
        auto idx = b.unravel(f);
        std::size_t key = 0, part = 0;
        for (auto [i, j] : pairs) key = key * b.dim(j) + idx[j];
        for (std::size_t k = 0; k < b_free.size(); ++k) part += idx[b_free[k]] * out_st[b_base + k];
        by_key[key].emplace_back(part, f);
    }
    for (std::size_t f = 0; f < a.size(); ++f) {
        if (a[f].is_zero()) continue;
        auto idx = a.unravel(f);
        std::size_t key = 0, part = 0;
        for (auto [i, j] : pairs) key = key * a.dim(i) + idx[i];
        auto it = by_key.find(key);
        if (it == by_key.end()) continue;
        for (std::size_t k = 0; k < a_free.size(); ++k) part += idx[a_free[k]] * out_st[k];
        for (auto [bpart, bf] : it->second) out[part + bpart] += a[f] * b[bf];
    }
    return out;
}

Tensor permute(const Tensor& a, const std::vector<std::size_t>& perm) {
    if (perm.size() != a.rank()) throw BadPermutation("permutation length does not match rank");
    std::vector<bool> seen(perm.size());
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw BadPermutation("not a permutation of the axes");
        seen[p] = true;
    }
    // Axis k of the result is axis perm[k] of the input.
    Shape shape(perm.size());
    std::vector<std::string> labels(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        shape[k] = a.dim(perm[k]);
        labels[k] = a.labels()[perm[k]];
    }
    Tensor out(shape, labels);
    auto st = strides_of(shape);
    for (std::size_t f = 0; f < a.size(); ++f) {
        if (a[f].is_zero()) continue;
        auto idx = a.unravel(f);
        std::size_t off = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) off += idx[perm[k]] * st[k];
        out[off] = a[f];
    }
    return out;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2) throw AxisMismatch("matmul needs matrices");
    return contract(a, b, {{1, 0}});
}

Tensor apply(const Tensor& m, const Tensor& v) {
    if (m.rank() != 2 || v.rank() != 1) throw AxisMismatch("apply needs a matrix and a vector");
    return contract(m, v, {{1, 0}});
}

Tensor transpose(const Tensor& m) { return permute(m, {1, 0}); }

Tensor mat_inverse(const Tensor& m) {
    require_square(m, "mat_inverse");
    const std::size_t n = m.dim(0);
    std::vector<std::vector<Rational>> a = m.rows();
    std::vector<Rational> scale(n, Rational(1));
    if (!field_modulus()) {
        // Clear denominators row by row so the elimination runs on integers.
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class l = 1;
            for (auto& e : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.denominator().get_mpz_t());
            scale[i] = Rational(mpq_class(l));
            if (l != 1)
                for (auto& e : a[i]) e *= scale[i];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        a[i].resize(2 * n);
        a[i][n + i] = 1;
    }
    Rational prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) throw Singular("matrix is singular");
        std::swap(a[p], a[k]);
        const Rational pivot = a[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                Rational v = pivot * a[i][j];
                if (!f.is_zero() && !a[k][j].is_zero()) v -= f * a[k][j];
                a[i][j] = prev.is_one() ? v : v / prev;
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    // Every diagonal entry now equals prev; the right block is prev times the
    // inverse of the row-scaled matrix.
    Tensor inv({n, n}, m.labels());
    const Rational d = prev.reciprocal();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j] * d * scale[j];
    return inv;
}

bool is_invertible(const Tensor& m) {
    try {
        mat_inverse(m);
        return true;
    } catch (const Singular&) {
        return false;
    }
}

Tensor mat_power(const Tensor& m, long long k) {
    require_square(m, "mat_power");
    Tensor base = k < 0 ? mat_inverse(m) : m;
    unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
    Tensor result = Tensor::identity(m.dim(0)).relabeled(m.labels());
    while (e) {
        if (e & 1) result = matmul(result, base);
        e >>= 1;
        if (e) base = matmul(base, base);
    }
    return result;
}

Tensor kron(const Tensor& a, const Tensor& b) {
    if (a.rank() != b.rank()) throw AxisMismatch("kron needs tensors of equal rank");
    const std::size_t r = a.rank();
    Shape shape(r);
    std::vector<std::string> labels(r);
    for (std::size_t i = 0; i < r; ++i) {
        shape[i] = a.dim(i) * b.dim(i);
        const auto& la = a.labels()[i];
        const auto& lb = b.labels()[i];
        labels[i] = la.empty() || lb.empty() ? "" : la + "⊗" + lb;
    }
    Tensor out(shape, labels);
    for (std::size_t fa = 0; fa < a.size(); ++fa) {
        if (a[fa].is_zero()) continue;
        auto ia = a.unravel(fa);
        for (std::size_t fb = 0; fb < b.size(); ++fb) {
            if (b[fb].is_zero()) continue;
            auto ib = b.unravel(fb);
            std::vector<std::size_t> idx(r);
            for (std::size_t i = 0; i < r; ++i) idx[i] = ia[i] * b.dim(i) + ib[i];
            out.at(idx) = a[fa] * b[fb];
        }
    }
    return out;
}

}  // namespace hombox
