#ifndef AMBITORIC_BUILDER_HPP
#define AMBITORIC_BUILDER_HPP

#include <optional>

#include "ambitoric/curvature.hpp"
#include "ambitoric/forms.hpp"

namespace ambitoric {

enum class FormType { parabolic, hyperbolic, elliptic, general };

const char* form_type_name(FormType t);
std::optional<FormType> form_type_by_name(std::string_view name);

/// Input data (q, A, B [, p]) of a regular ambitoric structure.
/// Named types carry their canonical quadratic: q = 1, 2z, 1+z^2.
struct AmbitoricSpec {
    FormType type = FormType::hyperbolic;
    QuadraticForm q;
    BinaryForm A, B; // degree bound 4
    std::optional<QuadraticForm> p;

    static QuadraticForm canonical_q(FormType t);
    static AmbitoricSpec make(FormType t, BinaryForm A, BinaryForm B,
                              std::optional<QuadraticForm> p = std::nullopt,
                              std::optional<QuadraticForm> general_q = std::nullopt);

    /// Invariants: q matches the named type (nonzero for general), A and B
    /// have bound 4 and are not both zero, p (if present) orthogonal to q.
    void validate() const;
};

/// dtau_i = M[i][0] dt1 + M[i][1] dt2, solving 2 q1 dtau1 = q0 dtau2 + q2 dtau0.
struct DtauMap {
    Rational m[3][2];
};

DtauMap dtau_map(const QuadraticForm& q);

/// The assembled structure on the chart (x, y, t1, t2):
/// gminus = f^2 gplus, g0 = f gplus, omega+- = g+-(J+- .,.), J+-^2 = -Id,
/// d omega+- = 0, all verified exactly at build time.
struct AmbitoricModel {
    AmbitoricSpec spec;
    Chart chart;
    Tensor g0, gplus, gminus;
    Tensor omegaplus, omegaminus;
    Tensor Jplus, Jminus;
    RationalFunction f;
    DtauMap dtau;

    Polynomial Ax, By;  // A(x), B(y)
    Polynomial qxy;     // q(x,y)
    Polynomial diff_xy; // x - y
};

/// Constructs the model; throws degenerate_error when A == 0 or B == 0 and
/// internal_error if any verification identity fails.
AmbitoricModel build(const AmbitoricSpec& spec);

/// p = {q,w}/2, the image of [w] in S^2_{0,q}.
QuadraticForm half_bracket(const QuadraticForm& q, const QuadraticForm& w);
/// Solve {q,w}/2 = p for w (defined up to multiples of q); requires <p,q> = 0.
QuadraticForm w_from_p(const QuadraticForm& q, const QuadraticForm& p);

/// The Killing field K^(p) (constant combination of d_t1, d_t2) with
/// dtau(K) = p; requires <p,q> = 0.
Tensor killing_field(const AmbitoricModel& model, const QuadraticForm& p);

/// mu^+_w = -w(x,y)/q(x,y); asserts d mu = -i_K omega+ for K = K^(p), p = {q,w}/2.
RationalFunction momentum_plus(const AmbitoricModel& model, const QuadraticForm& w);
/// mu^-_{p,c} = -(p(x,y)+c(x-y))/(x-y); requires <p,q> = 0; asserts
/// d mu = -i_K omega- for K = K^(p).
RationalFunction momentum_minus(const AmbitoricModel& model, const QuadraticForm& p,
                                const Rational& c);

/// chi = (xy dtau0 + (x+y) dtau1 + dtau2)/(x-y); d chi = -omega- (asserted).
Tensor symplectic_potential(const AmbitoricModel& model);

/// Calabi-type package on the chart (z, t, u, v) with Sigma the constant
/// curvature k surface (du^2+dv^2)/(1+k(u^2+v^2)/4)^2.
struct CalabiModel {
    BinaryForm V;    // profile, degree <= 4
    BinaryForm Vbar; // zbar^4 V(1/zbar)
    Rational k;
    Chart chart;
    Tensor gplus, gminus;
    Tensor omegaplus, omegaminus;
    Tensor Jplus, Jminus;
    Tensor alpha;    // 1-form with d alpha = omega_Sigma
    Tensor omega_sigma;
};

CalabiModel build_calabi(const BinaryForm& V, const Rational& k);

/// Exact sign chart of a metric on a user-supplied box.  Positivity is an
/// open-set condition and never enforced symbolically; this samples the
/// chart's active coordinates at rational points and classifies each sample
/// by the leading principal minors (all exact arithmetic).
struct PositivitySample {
    int positive = 0;   // positive definite at the sample
    int indefinite = 0; // some principal minor negative
    int excluded = 0;   // pole of a component or vanishing minor
};

PositivitySample sample_positivity(const Tensor& g,
                                   const std::array<std::optional<std::pair<Rational, Rational>>,
                                                    kNumVars>& box,
                                   int samples, std::uint64_t seed);

/// Plebanski-Demianski family: hyperbolic spec with p = 1 + eps z^2 and
///   A =  h+kappa + (sigma+delta) z + gamma z^2 + eps(sigma-delta) z^3 + (lambda-eps^2 h) z^4,
///   B =  h-kappa + (sigma-delta) z - gamma z^2 + eps(sigma+delta) z^3 - (lambda+eps^2 h) z^4.
AmbitoricSpec build_pd(const Rational& h, const Rational& kappa, const Rational& sigma,
                       const Rational& delta, const Rational& gamma, const Rational& eps,
                       const Rational& lambda);

} // namespace ambitoric

#endif
