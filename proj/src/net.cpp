#include "hombox/net.hpp"

#include <algorithm>
#include <unordered_map>

#include "hombox/errors.hpp"

namespace hombox {

namespace {

const std::string kTemp = "\x01";

}  // namespace

Net::Net() : entries_{{0, Rational(1)}} {}

Net Net::scalar(const Rational& c) {
    Net n;
    n.entries_.clear();
    if (!c.is_zero()) n.entries_.emplace_back(0, c);
    return n;
}

Net Net::input(const std::string& name, std::size_t dim, const std::string& label) {
    Net n;
    n.legs_ = {{"@" + name, dim, label}, {name, dim, label}};
    n.entries_.clear();
    for (std::size_t i = 0; i < dim; ++i) n.entries_.emplace_back(i * dim + i, Rational(1));
    return n;
}

Net Net::inputs(const std::vector<std::pair<std::string, std::size_t>>& names) {
    Net n;
    for (const auto& [name, dim] : names) n = n * input(name, dim);
    return n;
}

Net Net::constant(const Tensor& t, const std::vector<std::string>& names) {
    if (names.size() != t.rank()) throw AxisMismatch("constant needs one name per axis");
    Net n;
    n.entries_.clear();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (names[j] == names[i]) throw AxisMismatch("duplicate leg name " + names[i]);
        n.legs_.push_back({names[i], t.dim(i), t.labels()[i]});
    }
    n.strides();  // overflow check
    for (std::size_t f = 0; f < t.size(); ++f)
        if (!t[f].is_zero()) n.entries_.emplace_back(f, t[f]);
    return n;
}

std::vector<std::uint64_t> Net::strides() const {
    std::vector<std::uint64_t> st(legs_.size(), 1);
    for (std::size_t i = legs_.size(); i-- > 1;)
        if (__builtin_mul_overflow(st[i], legs_[i].dim, &st[i - 1]))
            throw AxisMismatch("network too large to index");
    if (!legs_.empty()) {
        std::uint64_t total;
        if (__builtin_mul_overflow(st[0], legs_[0].dim, &total)) throw AxisMismatch("network too large to index");
    }
    return st;
}

std::size_t Net::index_of(const std::string& leg) const {
    for (std::size_t i = 0; i < legs_.size(); ++i)
        if (legs_[i].name == leg) return i;
    throw AxisMismatch("no leg named " + leg);
}

bool Net::has(const std::string& leg) const {
    return std::any_of(legs_.begin(), legs_.end(), [&](const Leg& l) { return l.name == leg; });
}

std::size_t Net::dim(const std::string& leg) const { return legs_[index_of(leg)].dim; }

Net Net::contract(const Net& a, const Net& b) {
    std::vector<std::size_t> sa_pos, sb_pos, fa, fb;
    std::vector<bool> b_shared(b.legs_.size());
    for (std::size_t i = 0; i < a.legs_.size(); ++i) {
        std::size_t j = 0;
        while (j < b.legs_.size() && b.legs_[j].name != a.legs_[i].name) ++j;
        if (j == b.legs_.size()) {
            fa.push_back(i);
            continue;
        }
        if (a.legs_[i].dim != b.legs_[j].dim)
            throw AxisMismatch("leg " + a.legs_[i].name + " has sizes " + std::to_string(a.legs_[i].dim) + " and " +
                               std::to_string(b.legs_[j].dim));
        sa_pos.push_back(i);
        sb_pos.push_back(j);
        b_shared[j] = true;
    }
    for (std::size_t j = 0; j < b.legs_.size(); ++j)
        if (!b_shared[j]) fb.push_back(j);

    Net r;
    r.entries_.clear();
    for (auto i : fa) r.legs_.push_back(a.legs_[i]);
    for (auto j : fb) r.legs_.push_back(b.legs_[j]);
    const auto st = r.strides();
    const auto sa = a.strides();
    const auto sb = b.strides();
    auto digit = [](std::uint64_t key, std::uint64_t stride, std::size_t dim) { return key / stride % dim; };

    auto shared_key = [&](std::uint64_t key, const Net& n, const std::vector<std::uint64_t>& s,
                          const std::vector<std::size_t>& pos) {
        std::uint64_t k = 0;
        for (auto p : pos) k = k * n.legs_[p].dim + digit(key, s[p], n.legs_[p].dim);
        return k;
    };

    std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Rational*>>> groups;
    groups.reserve(b.entries_.size());
    for (const auto& [key, val] : b.entries_) {
        std::uint64_t part = 0;
        for (std::size_t k = 0; k < fb.size(); ++k)
            part += digit(key, sb[fb[k]], b.legs_[fb[k]].dim) * st[fa.size() + k];
        groups[shared_key(key, b, sb, sb_pos)].emplace_back(part, &val);
    }
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(a.entries_.size() * 2);
    for (const auto& [key, val] : a.entries_) {
        auto it = groups.find(shared_key(key, a, sa, sa_pos));
        if (it == groups.end()) continue;
        std::uint64_t part = 0;
        for (std::size_t k = 0; k < fa.size(); ++k) part += digit(key, sa[fa[k]], a.legs_[fa[k]].dim) * st[k];
        for (const auto& [bpart, bval] : it->second) {
            auto [slot, fresh] = acc.try_emplace(part + bpart, val * *bval);
            if (!fresh) slot->second += val * *bval;
        }
    }
    r.entries_.reserve(acc.size());
    for (auto& [key, val] : acc)
        if (!val.is_zero()) r.entries_.emplace_back(key, std::move(val));
    return r;
}

Net Net::operator*(const Net& o) const { return contract(*this, o); }

Net Net::apply(const Tensor& t, const std::vector<std::string>& in, const std::vector<std::string>& out) const {
    if (in.size() + out.size() != t.rank())
        throw AxisMismatch("map of rank " + std::to_string(t.rank()) + " applied with " +
                           std::to_string(in.size()) + " inputs and " + std::to_string(out.size()) + " outputs");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < in.size(); ++i) {
        index_of(in[i]);
        names.push_back(in[i]);
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (has(out[k]) && std::find(in.begin(), in.end(), out[k]) == in.end())
            throw AxisMismatch("leg " + out[k] + " already exists");
        names.push_back(kTemp + std::to_string(k));
    }
    Net r = contract(*this, constant(t, names));
    for (std::size_t k = 0; k < out.size(); ++k) r.legs_[r.legs_.size() - out.size() + k].name = out[k];
    return r;
}

Net Net::map(const std::string& leg, const Tensor& m, const std::string& out) const {
    if (m.rank() != 2) throw AxisMismatch("map needs a matrix");
    return apply(transpose(m), {leg}, {out.empty() ? leg : out});
}

Net Net::split(const std::string& leg, const Tensor& comult, const std::string& left, const std::string& right) const {
    return apply(comult, {leg}, {left, right});
}

Net Net::join(const std::string& a, const std::string& b, const Tensor& mult, const std::string& out) const {
    return apply(mult, {a, b}, {out});
}

Net Net::eval(const std::string& leg, const Tensor& covector) const { return apply(covector, {leg}, {}); }

Net Net::pair(const std::string& a, const std::string& b) const {
    std::size_t d = dim(a);
    if (dim(b) != d) throw AxisMismatch("pairing legs of different sizes");
    return apply(Tensor::identity(d), {a, b}, {});
}

Net Net::rename(const std::string& from, const std::string& to) const {
    if (from == to) return *this;
    if (has(to)) throw AxisMismatch("leg " + to + " already exists");
    Net r = *this;
    r.legs_[index_of(from)].name = to;
    return r;
}

Net Net::scaled(const Rational& c) const {
    if (c.is_zero()) {
        Net r = *this;
        r.entries_.clear();
        return r;
    }
    Net r = *this;
    for (auto& e : r.entries_) e.second *= c;
    return r;
}

Net Net::operator+(const Net& o) const {
    if (o.legs_.size() != legs_.size()) throw AxisMismatch("adding networks with different legs");
    const auto st = strides();
    const auto so = o.strides();
    std::vector<std::size_t> where(o.legs_.size());
    for (std::size_t j = 0; j < o.legs_.size(); ++j) {
        where[j] = index_of(o.legs_[j].name);
        if (legs_[where[j]].dim != o.legs_[j].dim) throw AxisMismatch("adding legs of different sizes");
    }
    std::unordered_map<std::uint64_t, Rational> acc;
    for (const auto& [k, v] : entries_) acc.emplace(k, v);
    for (const auto& [key, val] : o.entries_) {
        std::uint64_t k = 0;
        for (std::size_t j = 0; j < o.legs_.size(); ++j) k += key / so[j] % o.legs_[j].dim * st[where[j]];
        auto [slot, fresh] = acc.try_emplace(k, val);
        if (!fresh) slot->second += val;
    }
    Net r;
    r.legs_ = legs_;
    r.entries_.clear();
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.entries_.emplace_back(k, std::move(v));
    return r;
}

Net Net::operator-(const Net& o) const { return *this + o.scaled(-1); }

Tensor Net::collect(const std::vector<std::string>& order) const {
    if (order.size() != legs_.size()) {
        std::string have;
        for (const auto& l : legs_) have += " " + l.name;
        throw AxisMismatch("collect must list every leg; network has" + have);
    }
    Shape shape;
    std::vector<std::string> labels;
    std::vector<std::size_t> pos;
    for (const auto& name : order) {
        pos.push_back(index_of(name));
        shape.push_back(legs_[pos.back()].dim);
        labels.push_back(legs_[pos.back()].label);
    }
    Tensor t(shape, labels);
    const auto st = strides();
    std::vector<std::size_t> out_st(order.size(), 1);
    for (std::size_t i = order.size(); i-- > 1;) out_st[i - 1] = out_st[i] * shape[i];
    for (const auto& [key, val] : entries_) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < pos.size(); ++k) off += key / st[pos[k]] % legs_[pos[k]].dim * out_st[k];
        t[off] = val;
    }
    return t;
}

}  // namespace hombox
