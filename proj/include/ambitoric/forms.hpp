#ifndef AMBITORIC_FORMS_HPP
#define AMBITORIC_FORMS_HPP

#include <vector>

#include "ambitoric/ratfun.hpp"

namespace ambitoric {

/// Quadratic form q(z) = q0 z^2 + 2 q1 z + q2.
/// Mind the factor 2: q1 is HALF the z-coefficient, matching every
/// Poisson-bracket / discriminant / inner-product component formula below.
struct QuadraticForm {
    Rational q0, q1, q2;

    QuadraticForm() : q0(0), q1(0), q2(0) {}
    QuadraticForm(Rational a, Rational b, Rational c)
        : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)) {}

    bool is_zero() const { return q0.is_zero() && q1.is_zero() && q2.is_zero(); }

    /// q as a univariate polynomial in `var` (default z).
    Polynomial as_poly(int var = VZ) const;
    /// Polarization q(x,y) = q0 xy + q1 (x+y) + q2.
    Polynomial polarize_poly() const;

    QuadraticForm scaled(const Rational& c) const { return {q0 * c, q1 * c, q2 * c}; }

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.q0 == b.q0 && a.q1 == b.q1 && a.q2 == b.q2;
    }
    friend bool operator!=(const QuadraticForm& a, const QuadraticForm& b) { return !(a == b); }

    std::string str() const;
};

/// {q,w} componentwise:
///   {q,w}_0 = 2 q0 w1 - 2 q1 w0,
///   {q,w}_1 =   q0 w2 -   q2 w0,
///   {q,w}_2 = 2 q1 w2 - 2 q2 w1;
/// equals q'w - w'q as polynomials.
QuadraticForm poisson_bracket(const QuadraticForm& q, const QuadraticForm& w);

/// Q(q) = q1^2 - q0 q2.
Rational discriminant(const QuadraticForm& q);

/// <q,p> = 2 q1 p1 - (q2 p0 + q0 p2);  <q,q> = 2 Q(q).
Rational inner_product(const QuadraticForm& q, const QuadraticForm& p);

/// The bivariate polarization q(x,y) as a rational function; restriction to
/// x = y = z recovers q(z).
RationalFunction polarize(const QuadraticForm& q);

/// Extract the quadratic form of a polynomial of degree <= 2 in `var`
/// (q1 = half the linear coefficient).
QuadraticForm quadratic_from_poly(const Polynomial& p, int var = VZ);

/// Are two quadratic forms linearly dependent as vectors (q0,q1,q2)?
bool linearly_dependent(const QuadraticForm& a, const QuadraticForm& b);

/// Element of S^m W^*: univariate polynomial of degree <= m with an explicit
/// degree bound (the bound is part of the data; it feeds the transvectant
/// binomials).
struct BinaryForm {
    int bound = 0;
    Polynomial p; // univariate in z

    BinaryForm() = default;
    BinaryForm(int m, Polynomial poly);

    /// Coefficients in descending powers, a0 z^bound + ... (size bound+1).
    static BinaryForm from_descending(int bound, const std::vector<Rational>& coeffs);
    std::vector<Rational> descending_coefficients() const;

    bool is_zero() const { return p.is_zero(); }
    int degree() const { return p.degree(VZ); }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.bound == b.bound && a.p == b.p;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }
};

/// Transvectant of order r (SL(W)-equivariant pairing S^m x S^n -> S^{m+n-2r}):
///   (p,q)^(r) = sum_j (-1)^j C(m-j, r-j) C(n-r+j, j) p^(j) q^(r-j),
/// m = bound(p), n = bound(q).  Order 0 is multiplication; odd orders are
/// skew for m = n.
BinaryForm transvectant(const BinaryForm& p, const BinaryForm& q, int r);

/// T(p,C) = p C'' - 3 p' C' + 6 p'' C, the second-order bracket entering the
/// scalar curvature closed forms.  For p a perfect square of a linear form,
/// T(p,C) = p^2 [p [C/p^2]']' identically.
BinaryForm curvature_bracket(const BinaryForm& p, const BinaryForm& C);

/// Same bracket with derivatives in `var`, for multivariate arguments
/// (p = q(x,y)^2 in x with y symbolic, etc.).
Polynomial curvature_bracket_poly(const Polynomial& p, const Polynomial& C, int var);

} // namespace ambitoric

#endif
