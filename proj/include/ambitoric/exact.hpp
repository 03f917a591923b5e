#ifndef AMBITORIC_EXACT_HPP
#define AMBITORIC_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ambitoric/errors.hpp"

namespace ambitoric {

/// Arbitrary-precision rational, the ground field of every computation.
/// Always reduced: gcd(|num|, den) = 1, den > 0 (maintained by GMP).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Strict literal parser: `n` or `n/d`, optional leading '-', decimal
    /// digits only.  Rejects "1//2", "+1", "1/0", empty strings.
    static std::optional<Rational> parse(std::string_view s);
    /// Like parse() but throws parse_error.
    static Rational parse_or_throw(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;

    /// Exact square root if this is a perfect square of a rational, >= 0.
    std::optional<Rational> sqrt() const;

    /// "n" or "n/d".
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Deterministic RNG helpers.  std::uniform_int_distribution is
/// implementation-defined, so reports that must be byte-identical across
/// runs and platforms draw through these instead.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next();

    /// Uniform integer in [lo, hi] inclusive.
    long uniform(long lo, long hi);

    /// Uniform in [-5, 5], the spec-file coefficient range.
    Rational coefficient() { return Rational(uniform(-5, 5)); }

private:
    std::uint64_t s_;
};

} // namespace ambitoric

#endif
