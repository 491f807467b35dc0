#include "hombox/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

#include "hombox/errors.hpp"

namespace hombox {

namespace {

thread_local std::uint32_t g_modulus = 0;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_p(const mpz_class& v, std::int64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(r.get_ui());
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t v, std::int64_t p) {
    if (v == 0) throw DivisionByZero("division by zero in F_" + std::to_string(p));
    return pow_mod(v, static_cast<std::uint64_t>(p - 2), p);
}

bool fits(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z.get_si() != kMin;
}

}  // namespace

std::uint32_t field_modulus() { return g_modulus; }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FieldScope::FieldScope(std::uint32_t prime) : saved_(g_modulus) {
    if (prime >= (1u << 31) || !is_prime(prime))
        throw BadParam("field modulus must be a prime below 2^31, got " + std::to_string(prime));
    g_modulus = prime;
}

FieldScope::~FieldScope() { g_modulus = saved_; }

Rational::Rational(long long n) : num_(n) {
    if (n == kMin) *this = from_mpq(mpq_class(mpz_class(std::to_string(n))));
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (num == kMin || den == kMin) {
        *this = from_mpq(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
    if (g_modulus && den_ % g_modulus == 0)
        throw BadScalar(std::to_string(num_) + "/" + std::to_string(den_) + " has a denominator divisible by " +
                        std::to_string(g_modulus));
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (fits(q.get_num()) && fits(q.get_den())) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::make_shared<const mpq_class>(std::move(q));
    }
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&](const char* why) {
        return BadScalar("bad scalar \"" + std::string(text) + "\": " + why);
    };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        out.assign(text.substr(start, i - start));
        return !out.empty();
    };
    std::string num, den = "1";
    if (!digits(num)) throw bad("expected digits");
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den)) throw bad("expected denominator digits");
    }
    if (i != text.size()) throw bad("trailing characters");
    mpz_class n(num), d(den);
    if (d == 0) throw bad("zero denominator");
    if (neg) n = -n;
    return from_mpq(mpq_class(n, d));
}

Rational Rational::reduced_mod() const {
    const std::int64_t p = g_modulus;
    if (small() && den_ == 1 && num_ >= 0 && num_ < p) return *this;
    std::int64_t n, d;
    if (small()) {
        n = mod_p(num_, p);
        d = mod_p(den_, p);
    } else {
        n = mod_p(big_->get_num(), p);
        d = mod_p(big_->get_den(), p);
    }
    if (d == 0) throw BadScalar(to_mpq().get_str() + " has a denominator divisible by " + std::to_string(p));
    Rational r;
    r.num_ = n * inv_mod(d, p) % p;
    return r;
}

Rational Rational::canonical() const { return g_modulus ? reduced_mod() : *this; }

bool Rational::is_zero() const {
    if (g_modulus) return reduced_mod().num_ == 0;
    return small() && num_ == 0;
}

bool Rational::is_one() const {
    if (g_modulus) return reduced_mod().num_ == 1;
    return small() && num_ == 1 && den_ == 1;
}

int Rational::sign() const {
    if (g_modulus) return is_zero() ? 0 : 1;
    if (small()) return (num_ > 0) - (num_ < 0);
    return sgn(*big_);
}

bool Rational::is_integer() const {
    if (g_modulus) return true;
    return small() ? den_ == 1 : big_->get_den() == 1;
}

mpq_class Rational::to_mpq() const {
    if (!small()) return *big_;
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
    mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
    return q;
}

mpz_class Rational::numerator() const { return canonical().to_mpq().get_num(); }
mpz_class Rational::denominator() const { return canonical().to_mpq().get_den(); }

std::string Rational::str() const {
    if (g_modulus) {
        Rational r = reduced_mod();
        return std::to_string(r.num_);
    }
    if (small()) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    return big_->get_den() == 1 ? big_->get_num().get_str() : big_->get_str();
}

std::size_t Rational::hash() const {
    Rational r = canonical();
    if (r.small()) return std::hash<std::int64_t>{}(r.num_) * 31 + std::hash<std::int64_t>{}(r.den_);
    return std::hash<std::string>{}(r.big_->get_str());
}

Rational Rational::operator-() const {
    if (g_modulus) {
        Rational r = reduced_mod();
        if (r.num_) r.num_ = g_modulus - r.num_;
        return r;
    }
    if (small()) {
        Rational r = *this;
        r.num_ = -num_;
        return r;
    }
    return from_mpq(-*big_);
}

Rational Rational::reciprocal() const {
    if (g_modulus) {
        Rational r = reduced_mod();
        r.num_ = inv_mod(r.num_, g_modulus);
        return r;
    }
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    if (small()) {
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }
    return from_mpq(1 / *big_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (const std::int64_t p = g_modulus) {
        Rational r;
        r.num_ = (a.reduced_mod().num_ + b.reduced_mod().num_) % p;
        return r;
    }
    if (a.small() && b.small()) {
        Rational r;
        if (a.den_ == 1 && b.den_ == 1) {
            if (!__builtin_add_overflow(a.num_, b.num_, &r.num_) && r.num_ != kMin) return r;
        } else {
            std::int64_t g = std::gcd(a.den_, b.den_);
            std::int64_t x, y, t, d;
            if (!__builtin_mul_overflow(a.num_, b.den_ / g, &x) && !__builtin_mul_overflow(b.num_, a.den_ / g, &y) &&
                !__builtin_add_overflow(x, y, &t) && t != kMin) {
                std::int64_t g2 = std::gcd(t, g);
                if (!__builtin_mul_overflow(a.den_ / g, b.den_ / g2, &d)) {
                    r.num_ = t / g2;
                    r.den_ = d;
                    if (r.num_ == 0) r.den_ = 1;
                    return r;
                }
            }
        }
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (const std::int64_t p = g_modulus) {
        Rational r;
        r.num_ = a.reduced_mod().num_ * b.reduced_mod().num_ % p;
        return r;
    }
    if (a.small() && b.small()) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        Rational r;
        if (!__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &r.num_) && r.num_ != kMin &&
            !__builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &r.den_))
            return r;
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator==(const Rational& a, const Rational& b) {
    if (g_modulus) return a.reduced_mod().num_ == b.reduced_mod().num_;
    if (a.small() && b.small()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.small() != b.small()) return false;  // both canonical, so a big value never fits inline
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (g_modulus) return a.reduced_mod().num_ < b.reduced_mod().num_;
    return (a - b).sign() < 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hombox
