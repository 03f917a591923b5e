#ifndef AMBITORIC_CLASSIFIER_HPP
#define AMBITORIC_CLASSIFIER_HPP

#include <string>
#include <vector>

#include "ambitoric/builder.hpp"

namespace ambitoric {

/// Extremality: A = q pi + P, B = q pi - P with pi a quadratic orthogonal
/// to q.  For the named types the verdict is the normal-form linear
/// coefficient conditions; the decomposition criterion is asserted to agree.
struct ExtremalResult {
    bool verdict = false;
    std::vector<std::string> failed; // violated conditions, e.g. "a0+b0 = 2"
    std::optional<QuadraticForm> pi;
    std::optional<BinaryForm> P;
};

ExtremalResult extremal_check(const AmbitoricSpec& spec);

/// Scalar curvatures of g+- from the transvectant closed forms
///   s+- = -[T(p^2, A(x)) + T(p^2, B(y))] / ((x-y) q(x,y)),
/// p = q(x,y) for s+ and p = x-y for s-.  These match the tensor oracle up
/// to one frozen calibration constant (tests pin it).
struct ScalarClosed {
    RationalFunction splus, sminus;
};

ScalarClosed scalar_curvature_closed(const AmbitoricSpec& spec);

/// Closed-form scalar curvature of g = (q(x,y)/p(x,y))^2 g+.
RationalFunction sg_closed(const AmbitoricSpec& spec, const QuadraticForm& p);

/// Bach-flatness of an extremal spec: pi and {q,(q,P)^(2)} linearly
/// dependent, equivalently one quadratic coefficient relation per type.
/// Throws malformed_error when the spec is not extremal.
bool bach_flat_check(const AmbitoricSpec& spec);

/// The quadratic w with s+ = -w(x,y)/q(x,y) on extremal specs:
/// w = {q, (q,P)^(2)}.
QuadraticForm extremal_splus_quadratic(const AmbitoricSpec& spec);

struct EinsteinResult {
    bool conformally_flat = false; // s+ = s- = 0; W = 0 is then reported
    char side = 0;                 // '+' or '-': which s was used
    Tensor metric;                 // s^-2 g+-
    Tensor ric0_residual;
    bool verdict = false;          // residual == 0
};

/// Einstein metric s^-2 g+- for Bach-flat specs (oracle residual returned).
/// Throws malformed_error when the spec is not Bach-flat.
EinsteinResult einstein_conformal(const AmbitoricModel& model);

struct DiagonalRicciResult {
    Tensor g;                      // (q/p)^2 g+
    bool diagonal_verdict = false; // Ricci J+ and J- invariant
    RationalFunction sg_closed_form;
    Tensor ricci;                  // oracle Ricci of g
    RationalFunction scalar;       // oracle scalar of g
};

DiagonalRicciResult diagonal_ricci_metric(const AmbitoricModel& model, const QuadraticForm& p);

struct CscEmResult {
    bool verdict = false; // d s^g == 0 exactly
    std::optional<Rational> c;
    bool em_residual_zero = false;
    bool einstein = false; // rho proportional to q
    std::optional<QuadraticForm> rho;
    std::optional<BinaryForm> R;
};

/// CSC / Einstein-Maxwell check for g = (q/p)^2 g+ (requires <p,q> = 0).
/// On satisfying instances extracts the constant c with
/// Ric0(X,Y) = c g(omega+(X), omega-(Y)) and verifies the residual.
CscEmResult csc_em_check(const AmbitoricModel& model, const QuadraticForm& p);

struct KillingFGResult {
    Tensor g;        // h g0 (or g0 itself)
    Tensor S;        // the Killing tensor candidate
    Tensor residual; // symmetrized covariant derivative
};

/// Killing tensors S = f g + h g(J+J- .,.) with f = F(x)+G(y), h = F(x)-G(y)
/// on g = h g0; barycentric = true gives S = g0(J+J- .,.) on g0.
KillingFGResult killing_tensor_from_FG(const AmbitoricModel& model, const Polynomial& F,
                                       const Polynomial& G, bool barycentric = false);

/// Does g = (x-y) q/p^2 g0 admit a nontrivial Killing tensor?  Happens iff
/// Q(p) = 0; cross-checked against h_xy = 0 exactly.
bool diagonal_ricci_killing_existence(const AmbitoricSpec& spec, const QuadraticForm& p);

struct CalabiReport {
    bool extremal = false;
    bool bach_flat = false;
    bool csc = false;
    bool kahler_einstein = false;
};

/// Coefficient tests of the Calabi-type profile V(z) = a0 z^4 + a1 z^3 +
/// a2 z^2 + a3 z + a4 on constant curvature k:
///   extremal iff a2 = k; Bach-flat iff also 4 a0 a4 = a1 a3;
///   CSC iff also a0 = 0; Kahler-Einstein iff also a3 = 0.
CalabiReport calabi_classify(const BinaryForm& V, const Rational& k);

// ---- oracle-side verification helpers -------------------------------------

struct KaehlerVerification {
    bool ok = false;
    std::string detail; // first failing identity, empty when ok
};

/// d omega+- = 0, J+-^2 = -Id, and nabla^{g+-} J+- = 0, all exact.
KaehlerVerification verify_kaehler(const AmbitoricModel& model);

struct ExtremalOracle {
    RationalFunction splus, sminus; // tensor-engine scalar curvatures
    Tensor residual_plus;           // L_{J+ grad s+} g+
    Tensor residual_minus;          // L_{J- grad s-} g-
    bool extremal_plus = false;
    bool extremal_minus = false;
};

ExtremalOracle extremal_oracle(const AmbitoricModel& model);

/// (C-/C+)^4 of the conformal relation C+ s- = C- (-v-/v+)^{1/4} s+: the
/// constant value of s-^4 v+ / (-v- s+^4); nullopt when not constant.
std::optional<Rational> bach_flat_fourth_power_constant(const AmbitoricModel& model,
                                                        const RationalFunction& splus,
                                                        const RationalFunction& sminus);

/// Volume coefficient of omega ^ omega / 2 against dx^dy^dt1^dt2.
RationalFunction symplectic_volume(const Tensor& omega);

} // namespace ambitoric

#endif
