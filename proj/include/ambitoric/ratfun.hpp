#ifndef AMBITORIC_RATFUN_HPP
#define AMBITORIC_RATFUN_HPP

#include <array>
#include <optional>
#include <string>

#include "ambitoric/poly.hpp"

namespace ambitoric {

/// Quotient of multivariate polynomials in canonical form:
///   - numerator and denominator coprime over Q,
///   - integer coefficients with joint content 1,
///   - denominator's lex-leading coefficient positive,
///   - zero is 0/1.
/// Canonical form makes equality a componentwise comparison and is_zero a
/// numerator test.  Values are immutable; every operation returns a fresh
/// normalized value, so instances are safe to share across threads.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::integer(1)) {}
    RationalFunction(const Polynomial& p) : RationalFunction(p, Polynomial::integer(1)) {}
    RationalFunction(const Rational& c) : RationalFunction(Polynomial::constant(c)) {}
    RationalFunction(long n) : RationalFunction(Polynomial::integer(n)) {}
    /// num/den, normalized.  Zero denominator throws malformed_error.
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant rational function; throws if not constant.
    Rational constant_value() const;

    bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    /// Exact quotient-rule derivative, normalized.
    RationalFunction derivative(int var) const;

    /// Exact evaluation; throws pole_error at zeros of the denominator and
    /// malformed_error for unbound variables.
    Rational evaluate(const std::array<std::optional<Rational>, kNumVars>& point) const;

    std::optional<RationalFunction> sqrt() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;

private:
    Polynomial num_, den_;

    enum class Reduce { full, scale_only };
    RationalFunction(Polynomial num, Polynomial den, Reduce mode);
    void normalize(Reduce mode);
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

} // namespace ambitoric

#endif
