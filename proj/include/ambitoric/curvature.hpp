#ifndef AMBITORIC_CURVATURE_HPP
#define AMBITORIC_CURVATURE_HPP

#include "ambitoric/tensor.hpp"

namespace ambitoric {

/// Curvature data of a metric.
///   christoffel: (1,2), Gamma^k_ij at {k,i,j} (Koszul formula);
///   riemann:     (1,3), [R(d_i,d_j)d_k]^l at {l,k,i,j}, convention
///                R(X,Y)Z = D_X D_Y Z - D_Y D_X Z - D_[X,Y] Z;
///   riemann_low: (0,4), R(i,j,k,l) = g(R(d_i,d_j)d_k, d_l);
///   ricci:       (0,2), Ric(X,Y) = trace of Z -> R(Z,X)Y;
///   scalar:      g-trace of ricci.
struct CurvatureBundle {
    Tensor christoffel;
    Tensor riemann;
    Tensor riemann_low;
    Tensor ricci;
    RationalFunction scalar;
};

CurvatureBundle curvature(const Tensor& g);

/// Covariant derivative of a purely covariant tensor; the derivative slot
/// comes first: (DT)(a; i1..ik).
Tensor covariant_derivative(const Tensor& christoffel, const Tensor& T);
/// Covariant derivative of a (1,1) tensor: (DJ)(a; ^k_j) at {a,k,j}.
Tensor covariant_derivative11(const Tensor& christoffel, const Tensor& J);

/// Tracefree Ricci.
Tensor ricci0(const Tensor& g, const CurvatureBundle& cb);

/// Rational square root of det(g) (canonical sign); metrics built here have
/// perfect-square determinants.  Throws malformed_error otherwise.
RationalFunction sqrt_det(const Tensor& g);

/// Hodge star on 2-forms of an oriented 4-chart.
Tensor hodge_star2(const Tensor& g, const Tensor& form2);

/// Weyl tensor, (0,4) in riemann_low index order.
Tensor weyl_tensor(const Tensor& g, const CurvatureBundle& cb);

struct WeylSplit {
    Tensor wplus, wminus;            // half-Weyl tensors, W = W+ + W-
    bool degenerate_plus = false;    // repeated eigenvalue on Lambda^+
    bool degenerate_minus = false;
};

WeylSplit weyl_split(const Tensor& g);

/// Bach tensor, computed both as delta delta W - W*Ric0/2 and from the
/// half-Weyl expressions 2 delta delta W^pm - W^pm*Ric0, cross-checked;
/// symmetric and tracefree.
Tensor bach(const Tensor& g);

/// J-compatibility: J^2 = -Id and g(J.,J.) = g.
bool is_hermitian_pair(const Tensor& g, const Tensor& J);

/// Fundamental 2-form omega = g(J.,.).
Tensor kaehler_form(const Tensor& g, const Tensor& J);

/// Lee form: the unique theta with d omega = -2 theta ^ omega.
/// Throws malformed_error for a non-hermitian pair.
Tensor lee_form(const Tensor& g, const Tensor& J);

/// L_K g; zero iff K is Killing.
Tensor killing_vector_residual(const Tensor& g, const Tensor& K);

/// Fully symmetrized covariant derivative of a symmetric (0,2) tensor;
/// zero iff S is a Killing tensor.
Tensor killing_tensor_residual(const Tensor& g, const Tensor& S);

/// Nijenhuis (1,2) tensor; zero iff J integrable.
Tensor nijenhuis(const Tensor& J);

/// Residual of D_X phi = (d sigma ^ (JX)b - J d sigma ^ Xb)/2 with
/// sigma = tr_omega phi; slot order (a; i, j) for X = d_a.
/// Throws malformed_error if phi is not J-invariant.
Tensor hamiltonian_form_residual(const Tensor& g, const Tensor& J, const Tensor& phi);

/// grad_g f as a vector field.
Tensor gradient(const Tensor& g, const RationalFunction& f);
/// J grad_g f.
Tensor j_gradient(const Tensor& g, const Tensor& J, const RationalFunction& f);
/// Hamiltonian (symplectic) gradient: the vector K with i_K omega = -d f.
Tensor symplectic_gradient(const Tensor& omega, const RationalFunction& f);

/// Apply J to a 1-form: (J*alpha)(X) = alpha(JX).
Tensor j_pullback(const Tensor& J, const Tensor& alpha);

/// Divergence of a symmetric (0,2) tensor: (div T)_j = g^{ab} (DT)(a; b, j).
Tensor divergence_sym2(const Tensor& g, const Tensor& christoffel, const Tensor& T);

} // namespace ambitoric

#endif
