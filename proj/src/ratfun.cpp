#include "ambitoric/ratfun.hpp"

#include <ostream>

namespace ambitoric {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize(Reduce::full);
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Reduce mode)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize(mode);
}

void RationalFunction::normalize(Reduce mode) {
    if (den_.is_zero()) throw malformed_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::integer(1);
        return;
    }
    if (mode == Reduce::full && !den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    // joint integer scale: clear denominators, remove joint content, fix sign
    mpz_class lcm = 1;
    for (const auto& [m, c] : num_.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& [m, c] : den_.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class content = 0;
    auto fold = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            mpz_class z = c.num() * (lcm / c.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        }
    };
    fold(num_);
    fold(den_);
    Rational scale{mpq_class(lcm, content)};
    if (den_.leading().second.sign() < 0) scale = -scale;
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw malformed_error("constant_value of a non-constant rational function");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_,
                                RationalFunction::Reduce::full);
    }
    Polynomial bd = a.den_.divexact(g);
    Polynomial dd = b.den_.divexact(g);
    Polynomial t = a.num_ * dd + b.num_ * bd;
    return RationalFunction(std::move(t), bd * b.den_, RationalFunction::Reduce::full);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial n1 = g1.is_constant() ? a.num_ : a.num_.divexact(g1);
    Polynomial d2 = g1.is_constant() ? b.den_ : b.den_.divexact(g1);
    Polynomial n2 = g2.is_constant() ? b.num_ : b.num_.divexact(g2);
    Polynomial d1 = g2.is_constant() ? a.den_ : a.den_.divexact(g2);
    // cofactors are coprime, so only the scale normalization remains
    return RationalFunction(n1 * n2, d1 * d2, RationalFunction::Reduce::scale_only);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw malformed_error("division by zero rational function");
    return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw malformed_error("inverse of zero rational function");
    return RationalFunction(den_, num_, Reduce::scale_only);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return RationalFunction(Rational(1));
    RationalFunction base = e < 0 ? inverse() : *this;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    return RationalFunction(base.num_.pow(n), base.den_.pow(n), Reduce::scale_only);
}

RationalFunction RationalFunction::derivative(int var) const {
    if (var < 0 || var >= kNumVars) throw malformed_error("derivative: unknown variable");
    if (!depends_on(var)) return RationalFunction();
    Polynomial w = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    if (w.is_zero()) return RationalFunction();
    // peel one factor of gcd(w, den) before the full reduction; the
    // remaining common factor of w/g and den^2/g is handled by the
    // normalizing constructor on smaller operands
    Polynomial g = gcd(w, den_);
    if (g.is_constant()) return RationalFunction(std::move(w), den_ * den_, Reduce::full);
    Polynomial wn = w.divexact(g);
    Polynomial dn = den_.divexact(g);
    return RationalFunction(std::move(wn), den_ * dn, Reduce::full);
}

Rational RationalFunction::evaluate(const std::array<std::optional<Rational>, kNumVars>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero())
        throw pole_error("pole: denominator (" + den_.str() + ") vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::optional<RationalFunction> RationalFunction::sqrt() const {
    auto n = num_.sqrt();
    if (!n) return std::nullopt;
    auto d = den_.sqrt();
    if (!d) return std::nullopt;
    return RationalFunction(*n, *d, Reduce::scale_only);
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::integer(1)) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

} // namespace ambitoric
