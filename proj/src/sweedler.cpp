#include "hombox/sweedler.hpp"

#include <cctype>
#include <memory>
#include <set>

#include "hombox/errors.hpp"
#include "hombox/net.hpp"

namespace hombox {

SweedlerSpace sweedler_space(const HomBialgebra& b) {
    SweedlerSpace s;
    s.dim = b.dim();
    s.mult = b.mult();
    s.unit = b.unit();
    s.comult = b.comult();
    s.counit = b.counit();
    s.beta = b.beta();
    return s;
}

SweedlerSpace sweedler_space(const HomHopfAlgebra& h) {
    SweedlerSpace s = sweedler_space(h.bialgebra);
    s.antipode = h.antipode;
    return s;
}

namespace {

enum class Fn { beta, antipode, counit };

struct Node {
    enum Kind { sum, tensor, product, number, var, unit, apply, pairing } kind;
    std::vector<std::unique_ptr<Node>> kids;
    std::vector<int> signs;
    Rational value;
    std::string name;
    std::vector<std::string> word;
    std::vector<std::pair<Fn, long long>> fns;  // outermost first
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

class Parser {
public:
    Parser(const std::string& text, const std::map<std::string, long long>& params) : s_(text), params_(params) {}

    NodePtr parse() {
        NodePtr root = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected input");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ExpressionError(why + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool at(std::string_view tok) {
        skip();
        return s_.compare(pos_, tok.size(), tok) == 0;
    }

    bool eat(std::string_view tok) {
        if (!at(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
    }

    bool ident_char(std::size_t i) const {
        return i < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i])) || s_[i] == '\'');
    }

    std::string raw_ident() {
        skip();
        std::size_t start = pos_;
        if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a name");
        while (ident_char(pos_)) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    long long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    long long param(const std::string& name) {
        auto it = params_.find(name);
        if (it == params_.end()) fail("unknown parameter " + name);
        return it->second;
    }

    // ^k, ^-1, ^n, ^{n+1}, ⁻¹; absent means 1.
    long long exponent() {
        if (eat("⁻¹")) return -1;
        if (!eat("^")) return 1;
        if (eat("{")) {
            long long total = 0;
            bool any = false;
            while (!eat("}")) {
                int sign = any ? 0 : 1;
                if (eat("+")) sign = 1;
                else if (eat("-")) sign = -1;
                if (sign == 0) fail("expected '+' or '-' in exponent");
                skip();
                long long v;
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    v = integer();
                    skip();
                    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) v *= param(raw_ident());
                } else {
                    v = param(raw_ident());
                }
                total += sign * v;
                any = true;
            }
            if (!any) fail("empty exponent");
            return total;
        }
        if (eat("-")) return -integer();
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            // A single digit, so that β^2(x) and β^23 are not confused.
            return s_[pos_++] - '0';
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        return param(s_.substr(start, pos_ - start));
    }

    // Subscript after a variable: _1, _12, _{2[-1]}, _{1(0)}, or ₁₂.
    std::vector<std::string> word() {
        std::string body;
        if (pos_ < s_.size() && s_[pos_] == '_') {
            ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '{') {
                std::size_t close = s_.find('}', pos_);
                if (close == std::string::npos) fail("unterminated index word");
                body = s_.substr(pos_ + 1, close - pos_ - 1);
                pos_ = close + 1;
            } else {
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                body = s_.substr(start, pos_ - start);
            }
            if (body.empty()) throw MalformedIndexWord("empty index word in \"" + s_ + "\"");
        } else {
            while (true) {
                if (s_.compare(pos_, 3, "₁") == 0) body += '1';
                else if (s_.compare(pos_, 3, "₂") == 0) body += '2';
                else break;
                pos_ += 3;
            }
        }
        return split_word(body);
    }

    std::vector<std::string> split_word(const std::string& body) {
        std::vector<std::string> w;
        for (std::size_t i = 0; i < body.size();) {
            if (std::isspace(static_cast<unsigned char>(body[i]))) {
                ++i;
            } else if (body[i] == '1' || body[i] == '2') {
                w.emplace_back(1, body[i++]);
            } else {
                bool matched = false;
                for (const char* tok : {"[-1]", "[0]", "(0)", "(1)"}) {
                    std::string t(tok);
                    if (body.compare(i, t.size(), t) == 0) {
                        w.push_back(t);
                        i += t.size();
                        matched = true;
                        break;
                    }
                }
                if (!matched) throw MalformedIndexWord("bad index word \"" + body + "\"");
            }
        }
        return w;
    }

    NodePtr sum() {
        auto n = make(Node::sum);
        int sign = 1;
        if (eat("-")) sign = -1;
        else eat("+");
        while (true) {
            n->kids.push_back(tensor());
            n->signs.push_back(sign);
            if (eat("+")) sign = 1;
            else if (eat("-")) sign = -1;
            else break;
        }
        if (n->kids.size() == 1 && n->signs[0] == 1) return std::move(n->kids[0]);
        return n;
    }

    NodePtr tensor() {
        auto n = make(Node::tensor);
        n->kids.push_back(product());
        while (eat("⊗") || eat("&")) n->kids.push_back(product());
        if (n->kids.size() == 1) return std::move(n->kids[0]);
        return n;
    }

    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        unsigned char c = s_[pos_];
        if (std::isalnum(c) || c == '(' || c == '<') return true;
        for (const char* t : {"β", "α", "ε", "⟨"})
            if (at(t)) return true;
        return false;
    }

    NodePtr product() {
        auto n = make(Node::product);
        n->kids.push_back(factor());
        while (true) {
            bool dot = eat("·") || eat("*");
            if (!starts_factor()) {
                if (dot) fail("expected a factor");
                break;
            }
            n->kids.push_back(factor());
        }
        if (n->kids.size() == 1) return std::move(n->kids[0]);
        return n;
    }

    bool function_word(std::pair<Fn, long long>& out) {
        skip();
        auto word_at = [&](std::string_view w) {
            if (s_.compare(pos_, w.size(), w) != 0) return false;
            if (std::isalpha(static_cast<unsigned char>(w[0])) && ident_char(pos_ + w.size())) return false;
            pos_ += w.size();
            return true;
        };
        if (word_at("β") || word_at("α") || word_at("beta") || word_at("alpha")) {
            out = {Fn::beta, exponent()};
            return true;
        }
        if (word_at("ε") || word_at("eps")) {
            out = {Fn::counit, 1};
            return true;
        }
        if (s_.compare(pos_, 1, "S") == 0) {
            std::size_t save = pos_++;
            if (!at("(") && !at("^") && !at("⁻¹")) {
                pos_ = save;
                return false;
            }
            out = {Fn::antipode, exponent()};
            return true;
        }
        return false;
    }

    NodePtr factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            long long v = integer();
            if (pos_ < s_.size() && s_[pos_] == '_') {
                if (v != 1) fail("only 1_X names a unit");
                ++pos_;
                auto n = make(Node::unit);
                if (eat("{")) {
                    n->name = raw_ident();
                    expect("}");
                } else {
                    n->name = raw_ident();
                }
                return n;
            }
            auto n = make(Node::number);
            n->value = v;
            if (eat("/")) n->value = Rational(v) / Rational(integer());
            return n;
        }
        if (eat("(")) {
            NodePtr e = sum();
            expect(")");
            return e;
        }
        if (eat("<") || eat("⟨")) {
            auto n = make(Node::pairing);
            n->kids.push_back(sum());
            expect(",");
            n->kids.push_back(sum());
            if (!eat(">")) expect("⟩");
            return n;
        }
        auto n = make(Node::apply);
        std::pair<Fn, long long> f;
        while (function_word(f)) n->fns.push_back(f);
        if (!n->fns.empty()) {
            expect("(");
            n->kids.push_back(sum());
            expect(")");
            return n;
        }
        // Variables are one letter plus primes, so ab is a·b; digits right
        // after the name are a subscript.
        if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a factor");
        auto v = make(Node::var);
        std::size_t start = pos_++;
        while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
        v->name = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            v->word = split_word(s_.substr(d, pos_ - d));
        } else {
            v->word = word();
        }
        return v;
    }

    std::string s_;
    std::size_t pos_ = 0;
    const std::map<std::string, long long>& params_;
};

std::string join_word(const std::vector<std::string>& w) {
    std::string s;
    for (const auto& t : w) s += t;
    return s;
}

struct Slot {
    std::string leg;
    std::string space;
};

class Evaluator {
public:
    Evaluator(const SweedlerEnv& env, const std::map<std::string, std::size_t>& bindings,
              const std::vector<std::string>& inputs)
        : env_(env), bindings_(bindings), inputs_(inputs.begin(), inputs.end()) {}

    Tensor run(const Node& root, const std::vector<std::string>& inputs) {
        analyse(root, &root, nullptr);
        for (const auto& v : inputs)
            if (!owner_.count(v)) throw UnboundVariable("input " + v + " does not occur in the expression");
        Net net;
        auto slots = scope(root, net);
        std::vector<std::string> order;
        for (const auto& v : inputs) order.push_back("@" + v);
        for (const auto& s : slots) order.push_back(s.leg);
        return net.collect(order);
    }

private:
    // Assigns every variable occurrence to the summand (scope) containing it.
    void analyse(const Node& n, const Node* scope, const Node* owner_sum) {
        if (n.kind == Node::sum) {
            for (const auto& k : n.kids) analyse(*k, k.get(), &n);
            return;
        }
        if (n.kind == Node::var) {
            auto [it, fresh] = owner_.emplace(n.name, owner_sum);
            if (!fresh && it->second != owner_sum)
                throw MalformedIndexWord("variable " + n.name + " is used both inside and outside a sum");
            words_[scope][n.name].push_back(n.word);
            return;
        }
        for (const auto& k : n.kids) analyse(*k, scope, owner_sum);
    }

    const SweedlerSpace& space(const std::string& name) const {
        auto it = env_.spaces.find(name);
        if (it == env_.spaces.end()) throw MissingStructure("space " + name + " is not in the environment");
        return it->second;
    }

    std::string space_of_var(const std::string& v) const {
        auto it = env_.variables.find(v);
        return it != env_.variables.end() ? it->second : env_.default_space;
    }

    std::string fresh() { return "~" + std::to_string(counter_++); }

    struct Trie {
        std::map<std::string, Trie> kids;
        bool used = false;
    };

    void grow(Net& net, const Node* sc, const std::string& var, const std::string& leg, const std::string& sp,
              const Trie& t, std::vector<std::string>& prefix) {
        if (t.kids.empty()) {
            leaves_[{sc, var, join_word(prefix)}] = Slot{leg, sp};
            return;
        }
        std::set<std::string> keys;
        for (const auto& [k, _] : t.kids) keys.insert(k);
        const SweedlerSpace& S = space(sp);
        std::string a = leg + "." + *keys.begin(), b = leg + "." + *keys.rbegin();
        std::string sa = sp, sb = sp;
        std::string ka, kb;
        if (keys == std::set<std::string>{"1", "2"}) {
            ka = "1";
            kb = "2";
            a = leg + ".1";
            b = leg + ".2";
            net = net.split(leg, S.comult, a, b);
        } else if (keys == std::set<std::string>{"[-1]", "[0]"}) {
            if (!S.left_coaction) throw MissingStructure("space " + sp + " has no left coaction");
            ka = "[-1]";
            kb = "[0]";
            a = leg + ".[-1]";
            b = leg + ".[0]";
            sa = S.left_coactor;
            net = net.apply(S.left_coaction->tensor, {leg}, {a, b});
        } else if (keys == std::set<std::string>{"(0)", "(1)"}) {
            if (!S.right_coaction) throw MissingStructure("space " + sp + " has no right coaction");
            ka = "(0)";
            kb = "(1)";
            a = leg + ".(0)";
            b = leg + ".(1)";
            sb = S.right_coactor;
            net = net.apply(S.right_coaction->tensor, {leg}, {a, b});
        } else {
            std::string got;
            for (const auto& k : keys) got += " " + k;
            throw MalformedIndexWord("variable " + var + " splits into {" + got + " } at \"" + join_word(prefix) +
                                     "\"; both halves of one split must be used");
        }
        prefix.push_back(ka);
        grow(net, sc, var, a, sa, t.kids.at(ka), prefix);
        prefix.back() = kb;
        grow(net, sc, var, b, sb, t.kids.at(kb), prefix);
        prefix.pop_back();
    }

    void plant(Net& net, const Node* sc) {
        auto found = words_.find(sc);
        if (found == words_.end()) return;
        for (const auto& [var, words] : found->second) {
            Trie root;
            for (const auto& w : words) {
                Trie* t = &root;
                for (const auto& tok : w) {
                    if (t->used) throw MalformedIndexWord("variable " + var + " is used both split and unsplit");
                    t = &t->kids[tok];
                }
                if (t->used || !t->kids.empty())
                    throw MalformedIndexWord("index word \"" + join_word(w) + "\" of " + var +
                                             " is used twice or also split further");
                t->used = true;
            }
            const std::string sp = space_of_var(var);
            const SweedlerSpace& S = space(sp);
            const std::string leg = "$" + var;
            if (inputs_.count(var)) {
                net = net * Net::input(var, S.dim).rename(var, leg);
            } else {
                auto b = bindings_.find(var);
                if (b == bindings_.end()) throw UnboundVariable("variable " + var + " is not bound");
                if (b->second >= S.dim)
                    throw DimMismatch("binding " + var + " -> " + std::to_string(b->second) + " exceeds dim " +
                                      std::to_string(S.dim));
                net = net * Net::constant(Tensor::basis_vector(S.dim, b->second), {leg});
            }
            std::vector<std::string> prefix;
            grow(net, sc, var, leg, sp, root, prefix);
        }
    }

    std::vector<Slot> scope(const Node& n, Net& net) {
        plant(net, &n);
        return eval(n, &n, net);
    }

    Slot single(const Node& n, const Node* sc, Net& net, const char* what) {
        auto slots = eval(n, sc, net);
        if (slots.size() != 1) throw ExpressionError(std::string(what) + " needs a single element");
        return slots[0];
    }

    std::vector<Slot> eval(const Node& n, const Node* sc, Net& net) {
        switch (n.kind) {
            case Node::sum: {
                Net total = Net::scalar(0);
                std::vector<Slot> shape;
                for (std::size_t i = 0; i < n.kids.size(); ++i) {
                    Net sub;
                    auto slots = scope(*n.kids[i], sub);
                    for (std::size_t k = 0; k < slots.size(); ++k) sub = sub.rename(slots[k].leg, "=" + std::to_string(k));
                    sub = sub.scaled(n.signs[i]);
                    if (i == 0) {
                        shape = slots;
                        total = sub;
                        continue;
                    }
                    if (slots.size() != shape.size()) throw ExpressionError("summands have different tensor ranks");
                    for (std::size_t k = 0; k < slots.size(); ++k)
                        if (slots[k].space != shape[k].space)
                            throw ExpressionError("summands live in different spaces");
                    try {
                        total = total + sub;
                    } catch (const AxisMismatch&) {
                        throw ExpressionError("summands must use the same free variables");
                    }
                }
                std::vector<Slot> out;
                for (std::size_t k = 0; k < shape.size(); ++k) {
                    std::string leg = fresh();
                    total = total.rename("=" + std::to_string(k), leg);
                    out.push_back({leg, shape[k].space});
                }
                net = net * total;
                return out;
            }
            case Node::tensor: {
                std::vector<Slot> out;
                for (const auto& k : n.kids) {
                    auto s = eval(*k, sc, net);
                    out.insert(out.end(), s.begin(), s.end());
                }
                return out;
            }
            case Node::product: {
                std::optional<Slot> acc;
                for (const auto& k : n.kids) {
                    auto s = eval(*k, sc, net);
                    if (s.empty()) continue;
                    if (s.size() > 1) throw ExpressionError("a tensor factor cannot be multiplied");
                    if (!acc) {
                        acc = s[0];
                        continue;
                    }
                    if (acc->space != s[0].space)
                        throw ExpressionError("multiplying elements of " + acc->space + " and " + s[0].space);
                    std::string leg = fresh();
                    net = net.join(acc->leg, s[0].leg, space(acc->space).mult, leg);
                    acc->leg = leg;
                }
                if (!acc) return {};
                return {*acc};
            }
            case Node::number:
                net = net.scaled(n.value);
                return {};
            case Node::unit: {
                std::string leg = fresh();
                net = net * Net::constant(space(n.name).unit, {leg});
                return {{leg, n.name}};
            }
            case Node::var: {
                auto it = leaves_.find({sc, n.name, join_word(n.word)});
                if (it == leaves_.end()) throw MalformedIndexWord("index word of " + n.name + " was not planted");
                return {it->second};
            }
            case Node::apply: {
                Slot s = single(*n.kids[0], sc, net, "a function argument");
                bool scalar = false;
                for (auto f = n.fns.rbegin(); f != n.fns.rend(); ++f) {
                    if (scalar) throw ExpressionError("applying a map to a scalar");
                    const SweedlerSpace& S = space(s.space);
                    switch (f->first) {
                        case Fn::beta:
                            net = net.map(s.leg, mat_power(S.beta, f->second));
                            break;
                        case Fn::antipode:
                            if (!S.antipode) throw MissingStructure("space " + s.space + " has no antipode");
                            net = net.map(s.leg, mat_power(*S.antipode, f->second));
                            break;
                        case Fn::counit:
                            net = net.eval(s.leg, S.counit);
                            scalar = true;
                            break;
                    }
                }
                if (scalar) return {};
                return {s};
            }
            case Node::pairing: {
                Slot a = single(*n.kids[0], sc, net, "a pairing");
                Slot b = single(*n.kids[1], sc, net, "a pairing");
                if (space(a.space).dual_of != b.space && space(b.space).dual_of != a.space)
                    throw ExpressionError("cannot pair " + a.space + " with " + b.space);
                net = net.pair(a.leg, b.leg);
                return {};
            }
        }
        return {};
    }

    const SweedlerEnv& env_;
    const std::map<std::string, std::size_t>& bindings_;
    std::set<std::string> inputs_;
    std::map<std::string, const Node*> owner_;
    std::map<const Node*, std::map<std::string, std::vector<std::vector<std::string>>>> words_;
    std::map<std::tuple<const Node*, std::string, std::string>, Slot> leaves_;
    int counter_ = 0;
};

}  // namespace

Tensor sweedler_eval(const std::string& expr, const std::map<std::string, std::size_t>& bindings,
                     const SweedlerEnv& env) {
    NodePtr root = Parser(expr, env.params).parse();
    return Evaluator(env, bindings, {}).run(*root, {});
}

Tensor sweedler_map(const std::string& expr, const std::vector<std::string>& inputs, const SweedlerEnv& env) {
    NodePtr root = Parser(expr, env.params).parse();
    static const std::map<std::string, std::size_t> none;
    return Evaluator(env, none, inputs).run(*root, inputs);
}

}  // namespace hombox
