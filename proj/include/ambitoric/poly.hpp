#ifndef AMBITORIC_POLY_HPP
#define AMBITORIC_POLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambitoric/exact.hpp"

namespace ambitoric {

// Fixed variable universe.  Chart coordinates use x,y,z,u,v; a,b,c are
// spare symbols (the Plebanski-Demianski parameter identities use seven
// symbols at once).
inline constexpr int kNumVars = 8;
enum Var : int { VX = 0, VY, VZ, VU, VV, VA, VB, VC };

const char* var_name(int v);
std::optional<int> var_by_name(std::string_view name);

/// Packed monomial: 8 bits of exponent per variable, x in the most
/// significant byte, so unsigned comparison of keys is lexicographic order
/// with x > y > z > u > v > a > b > c.
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int v) { return static_cast<int>((m >> (8 * (7 - v))) & 0xffu); }
inline Mono mono_make(int v, int e) { return static_cast<Mono>(static_cast<std::uint64_t>(e) << (8 * (7 - v))); }

/// Global per-variable degree cap (resource guard).  Default 200, override
/// with set_degree_cap or the AMBITORIC_DEGREE_CAP environment variable;
/// hard ceiling 255 (packed exponents are 8-bit).
int degree_cap();
void set_degree_cap(int cap);

/// Sparse multivariate polynomial over the rationals.
/// Terms are kept sorted in descending lex order with no zero coefficients.
class Polynomial {
public:
    using Term = std::pair<Mono, Rational>;

    Polynomial() = default;

    static Polynomial constant(Rational c);
    static Polynomial integer(long n) { return constant(Rational(n)); }
    static Polynomial variable(int v);
    static Polynomial monomial(Mono m, Rational c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    /// Max exponent of `var`; -1 for the zero polynomial.
    int degree(int var) const;
    int total_degree() const;
    bool depends_on(int var) const { return degree(var) > 0; }
    /// Bitmask of variables with positive degree.
    std::uint32_t used_vars() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    Polynomial derivative(int var) const;

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    Polynomial coefficient_of(int var, int k) const;
    /// Substitute a polynomial for a variable.
    Polynomial substitute(int var, const Polynomial& value) const;

    /// Full evaluation; every variable that occurs must be bound.
    Rational evaluate(const std::array<std::optional<Rational>, kNumVars>& point) const;

    /// Exact division; nullopt if not divisible.
    std::optional<Polynomial> try_divide(const Polynomial& divisor) const;
    /// Exact division; throws internal_error if not divisible.
    Polynomial divexact(const Polynomial& divisor) const;

    /// Exact polynomial square root (canonical root: positive lex-leading
    /// coefficient); nullopt if this is not a perfect square.
    std::optional<Polynomial> sqrt() const;

    const Term& leading() const; // lex-leading term; requires nonzero

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const;

    /// Internal: build from raw terms (must be sorted descending, nonzero).
    static Polynomial from_sorted_terms(std::vector<Term> terms);

private:
    std::vector<Term> t_;
    static void check_cap(const Polynomial& a, const Polynomial& b);
};

/// GCD over Q[x,...]: returns the integer-primitive gcd with positive
/// lex-leading coefficient (1 for coprime inputs).  Bivariate and deeper
/// cases run subresultant pseudo-remainder sequences with recursive content
/// extraction.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace ambitoric

#endif
