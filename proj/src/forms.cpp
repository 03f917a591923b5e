#include "ambitoric/forms.hpp"

#include <sstream>

namespace ambitoric {

Polynomial QuadraticForm::as_poly(int var) const {
    Polynomial z = Polynomial::variable(var);
    return z * z * Polynomial::constant(q0) + z * Polynomial::constant(q1 * Rational(2)) +
           Polynomial::constant(q2);
}

Polynomial QuadraticForm::polarize_poly() const {
    Polynomial x = Polynomial::variable(VX), y = Polynomial::variable(VY);
    return x * y * Polynomial::constant(q0) + (x + y) * Polynomial::constant(q1) +
           Polynomial::constant(q2);
}

std::string QuadraticForm::str() const {
    std::ostringstream os;
    os << "(" << q0 << ", " << q1 << ", " << q2 << ")";
    return os.str();
}

QuadraticForm poisson_bracket(const QuadraticForm& q, const QuadraticForm& w) {
    Rational two(2);
    return {two * (q.q0 * w.q1 - q.q1 * w.q0), q.q0 * w.q2 - q.q2 * w.q0,
            two * (q.q1 * w.q2 - q.q2 * w.q1)};
}

Rational discriminant(const QuadraticForm& q) { return q.q1 * q.q1 - q.q0 * q.q2; }

Rational inner_product(const QuadraticForm& q, const QuadraticForm& p) {
    return Rational(2) * q.q1 * p.q1 - (q.q2 * p.q0 + q.q0 * p.q2);
}

RationalFunction polarize(const QuadraticForm& q) { return RationalFunction(q.polarize_poly()); }

QuadraticForm quadratic_from_poly(const Polynomial& p, int var) {
    if (p.degree(var) > 2) throw malformed_error("quadratic_from_poly: degree exceeds 2");
    auto coeff = [&](int k) {
        Polynomial c = p.coefficient_of(var, k);
        if (!c.is_constant())
            throw malformed_error("quadratic_from_poly: non-constant coefficient");
        return c.constant_value();
    };
    return {coeff(2), coeff(1) / Rational(2), coeff(0)};
}

bool linearly_dependent(const QuadraticForm& a, const QuadraticForm& b) {
    return (a.q0 * b.q1 - a.q1 * b.q0).is_zero() && (a.q0 * b.q2 - a.q2 * b.q0).is_zero() &&
           (a.q1 * b.q2 - a.q2 * b.q1).is_zero();
}

BinaryForm::BinaryForm(int m, Polynomial poly) : bound(m), p(std::move(poly)) {
    if (m < 0) throw malformed_error("binary form with negative degree bound");
    if ((p.used_vars() & ~(1u << VZ)) != 0)
        throw malformed_error("binary form must be univariate in z");
    if (p.degree(VZ) > m) throw malformed_error("binary form degree exceeds its bound");
}

BinaryForm BinaryForm::from_descending(int bound, const std::vector<Rational>& coeffs) {
    if (static_cast<int>(coeffs.size()) != bound + 1)
        throw malformed_error("binary form needs bound+1 coefficients");
    Polynomial p;
    for (int i = 0; i <= bound; ++i)
        p += Polynomial::monomial(mono_make(VZ, bound - i), coeffs[static_cast<std::size_t>(i)]);
    return BinaryForm(bound, p);
}

std::vector<Rational> BinaryForm::descending_coefficients() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(bound) + 1);
    for (int i = 0; i <= bound; ++i) {
        Polynomial c = p.coefficient_of(VZ, bound - i);
        out.push_back(c.constant_value());
    }
    return out;
}

namespace {

Rational binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(b));
}

} // namespace

BinaryForm transvectant(const BinaryForm& p, const BinaryForm& q, int r) {
    int m = p.bound, n = q.bound;
    if (r < 0 || r > std::min(m, n))
        throw malformed_error("transvectant order out of range 0..min(m,n)");
    std::vector<Polynomial> dp{p.p}, dq{q.p};
    for (int j = 1; j <= r; ++j) {
        dp.push_back(dp.back().derivative(VZ));
        dq.push_back(dq.back().derivative(VZ));
    }
    Polynomial sum;
    for (int j = 0; j <= r; ++j) {
        Rational c = binom(m - j, r - j) * binom(n - r + j, j);
        if (j % 2 == 1) c = -c;
        if (c.is_zero()) continue;
        sum += (dp[static_cast<std::size_t>(j)] * dq[static_cast<std::size_t>(r - j)]).scaled(c);
    }
    BinaryForm out(m + n - 2 * r, sum);
    return out;
}

BinaryForm curvature_bracket(const BinaryForm& p, const BinaryForm& C) {
    if (p.degree() > 4 || C.degree() > 4)
        throw malformed_error("curvature_bracket expects degree <= 4 inputs");
    Polynomial t = curvature_bracket_poly(p.p, C.p, VZ);
    return BinaryForm(std::max(0, t.degree(VZ)), t);
}

Polynomial curvature_bracket_poly(const Polynomial& p, const Polynomial& C, int var) {
    Polynomial p1 = p.derivative(var), p2 = p1.derivative(var);
    Polynomial C1 = C.derivative(var), C2 = C1.derivative(var);
    return p * C2 - (p1 * C1).scaled(Rational(3)) + (p2 * C).scaled(Rational(6));
}

} // namespace ambitoric
