#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hombox {

// Exact scalar. Values whose numerator and denominator fit in int64 stay
// inline; anything larger lives in a shared, immutable mpq_class.
//
// When a prime field is active on the current thread (see FieldScope) every
// operation reduces its operands mod p and returns a canonical residue.
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);

    // "p", "-p", "+p", "p/q" with q != 0.
    static Rational parse(std::string_view text);

    bool is_zero() const;
    bool is_one() const;
    int sign() const;
    bool is_integer() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;
    std::size_t hash() const;

    // Canonical representative in the active field (identity over Q).
    Rational canonical() const;

    Rational operator-() const;
    Rational reciprocal() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // Ordering is only meaningful over Q.
    friend bool operator<(const Rational& a, const Rational& b);

private:
    static Rational from_mpq(mpq_class q);
    bool small() const { return !big_; }
    Rational reduced_mod() const;

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Active prime modulus of the calling thread, 0 when working over Q.
std::uint32_t field_modulus();
bool is_prime(std::uint64_t p);

// Switches the calling thread to F_p for the lifetime of the scope.
class FieldScope {
public:
    explicit FieldScope(std::uint32_t prime);
    ~FieldScope();
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;

private:
    std::uint32_t saved_;
};

}  // namespace hombox

template <>
struct std::hash<hombox::Rational> {
    std::size_t operator()(const hombox::Rational& r) const noexcept { return r.hash(); }
};
