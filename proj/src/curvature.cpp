#include "ambitoric/curvature.hpp"

namespace ambitoric {

namespace {

void require_metric(const Tensor& g) {
    if (g.contravariant() != 0 || g.covariant() != 2)
        throw malformed_error("expected a (0,2) metric tensor");
}

} // namespace

CurvatureBundle curvature(const Tensor& g) {
    require_metric(g);
    const int n = g.dim();
    Tensor ginv = metric_inverse(g); // throws degenerate_error on det == 0

    // Gamma^k_ij = g^{kl} (d_i g_jl + d_j g_il - d_l g_ij) / 2
    Tensor gamma(g.chart(), 1, 2);
    const RationalFunction half(Rational(1, 2));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                RationalFunction s;
                for (int l = 0; l < n; ++l) {
                    if (ginv.at({k, l}).is_zero()) continue;
                    RationalFunction t = g.coord_derivative(g.at({j, l}), i) +
                                         g.coord_derivative(g.at({i, l}), j) -
                                         g.coord_derivative(g.at({i, j}), l);
                    s = s + ginv.at({k, l}) * t;
                }
                gamma.at({k, i, j}) = s * half;
                gamma.at({k, j, i}) = gamma.at({k, i, j});
            }
        }

    // Riem(l,k,i,j) = d_i Gamma^l_jk - d_j Gamma^l_ik
    //               + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
    Tensor riem(g.chart(), 1, 3);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RationalFunction s = g.coord_derivative(gamma.at({l, j, k}), i) -
                                         g.coord_derivative(gamma.at({l, i, k}), j);
                    for (int m = 0; m < n; ++m)
                        s = s + gamma.at({l, i, m}) * gamma.at({m, j, k}) -
                            gamma.at({l, j, m}) * gamma.at({m, i, k});
                    riem.at({l, k, i, j}) = s;
                    riem.at({l, k, j, i}) = -s;
                }

    Tensor rlow(g.chart(), 0, 4);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RationalFunction s;
                    for (int m = 0; m < n; ++m) {
                        if (g.at({l, m}).is_zero()) continue;
                        s = s + g.at({l, m}) * riem.at({m, k, i, j});
                    }
                    rlow.at({i, j, k, l}) = s;
                    rlow.at({j, i, k, l}) = -s;
                }

    // Ric(i,j) = trace of Z -> R(Z, d_i) d_j = sum_m Riem(m, j, m, i)
    Tensor ric(g.chart(), 0, 2, Sym::symmetric);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction s;
            for (int m = 0; m < n; ++m) s = s + riem.at({m, j, m, i});
            ric.at({i, j}) = s;
        }

    RationalFunction scal;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ginv.at({i, j}).is_zero()) continue;
            scal = scal + ginv.at({i, j}) * ric.at({i, j});
        }

    return CurvatureBundle{std::move(gamma), std::move(riem), std::move(rlow), std::move(ric),
                           std::move(scal)};
}

Tensor covariant_derivative(const Tensor& christoffel, const Tensor& T) {
    if (T.contravariant() != 0) throw malformed_error("covariant_derivative: covariant tensors only");
    const int n = T.dim();
    const int k = T.covariant();
    Tensor out(T.chart(), 0, k + 1);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(n);
    for (int a = 0; a < n; ++a) {
        for (std::size_t f = 0; f < total; ++f) {
            std::size_t rem = f;
            for (int s = k - 1; s >= 0; --s) {
                idx[static_cast<std::size_t>(s)] = static_cast<int>(rem % static_cast<std::size_t>(n));
                rem /= static_cast<std::size_t>(n);
            }
            RationalFunction v = T.coord_derivative(T.flat(f), a);
            for (int s = 0; s < k; ++s) {
                int save = idx[static_cast<std::size_t>(s)];
                for (int m = 0; m < n; ++m) {
                    const RationalFunction& G = christoffel.at({m, a, save});
                    if (G.is_zero()) continue;
                    idx[static_cast<std::size_t>(s)] = m;
                    std::size_t fm = 0;
                    for (int q = 0; q < k; ++q)
                        fm = fm * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(idx[static_cast<std::size_t>(q)]);
                    v = v - G * T.flat(fm);
                }
                idx[static_cast<std::size_t>(s)] = save;
            }
            out.flat(static_cast<std::size_t>(a) * total + f) = v;
        }
    }
    return out;
}

Tensor covariant_derivative11(const Tensor& christoffel, const Tensor& J) {
    const int n = J.dim();
    Tensor out(J.chart(), 0, 3); // slots (a, k, j) for (D_a J)^k_j
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                RationalFunction v = J.coord_derivative(J.at({k, j}), a);
                for (int m = 0; m < n; ++m) {
                    v = v + christoffel.at({k, a, m}) * J.at({m, j}) -
                        christoffel.at({m, a, j}) * J.at({k, m});
                }
                out.at({a, k, j}) = v;
            }
    return out;
}

Tensor ricci0(const Tensor& g, const CurvatureBundle& cb) {
    const int n = g.dim();
    Tensor r0 = cb.ricci;
    RationalFunction snn = cb.scalar / RationalFunction(Rational(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r0.at({i, j}) = r0.at({i, j}) - snn * g.at({i, j});
    r0.set_sym(Sym::symmetric);
    return r0;
}

RationalFunction sqrt_det(const Tensor& g) {
    auto root = metric_det(g).sqrt();
    if (!root)
        throw malformed_error("det(g) is not the square of a rational function; "
                              "Hodge star unavailable on this metric");
    return *root;
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int eps4(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) { std::swap(p[i], p[j]); sign = -sign; }
        }
    return sign;
}

// 6x6 matrix of the Hodge star acting on lowered 2-form components eta_{ab},
// a<b ordered as kPairs.
std::vector<std::vector<RationalFunction>> star_matrix(const Tensor& g, const Tensor& ginv) {
    RationalFunction V = sqrt_det(g);
    if (g.chart().orientation < 0) V = -V;
    std::vector<std::vector<RationalFunction>> S(6, std::vector<RationalFunction>(6));
    for (int P = 0; P < 6; ++P) {
        int i = kPairs[P][0], j = kPairs[P][1];
        for (int Q = 0; Q < 6; ++Q) {
            int c = kPairs[Q][0], d = kPairs[Q][1];
            // (*eta)_{ij} = 1/2 eta^{kl} vol_{klij};  M = sum_{k,l} vol_{klij} g^{kc} g^{ld}
            RationalFunction m;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) {
                    int e = eps4(k, l, i, j);
                    if (e == 0) continue;
                    RationalFunction t = ginv.at({k, c}) * ginv.at({l, d});
                    if (t.is_zero()) continue;
                    m = (e > 0) ? m + t : m - t;
                }
            S[static_cast<std::size_t>(P)][static_cast<std::size_t>(Q)] = V * m;
        }
    }
    return S;
}

using Mat6 = std::vector<std::vector<RationalFunction>>;

Mat6 mat_mul(const Mat6& A, const Mat6& B) {
    Mat6 C(6, std::vector<RationalFunction>(6));
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k) {
            if (A[i][k].is_zero()) continue;
            for (int j = 0; j < 6; ++j) {
                if (B[k][j].is_zero()) continue;
                C[i][j] = C[i][j] + A[i][k] * B[k][j];
            }
        }
    return C;
}

RationalFunction mat_trace(const Mat6& A) {
    RationalFunction t;
    for (int i = 0; i < 6; ++i) t = t + A[i][i];
    return t;
}

// Weyl as an endomorphism of lowered 2-forms: (W eta)_{ij} = sum_{k<l} Wr(i,j,k,l) eta_{kl},
// Wr = W with last pair raised.
Mat6 weyl_operator(const Tensor& W, const Tensor& ginv) {
    Mat6 M(6, std::vector<RationalFunction>(6));
    for (int P = 0; P < 6; ++P) {
        int i = kPairs[P][0], j = kPairs[P][1];
        for (int Q = 0; Q < 6; ++Q) {
            int k = kPairs[Q][0], l = kPairs[Q][1];
            RationalFunction s;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const RationalFunction& w = W.at({i, j, c, d});
                    if (w.is_zero()) continue;
                    RationalFunction t = ginv.at({c, k}) * ginv.at({d, l});
                    if (t.is_zero()) continue;
                    s = s + w * t;
                }
            M[static_cast<std::size_t>(P)][static_cast<std::size_t>(Q)] = s;
        }
    }
    return M;
}

// Discriminant of the characteristic polynomial of the 3x3 restriction of a
// 6x6 operator N that annihilates the complementary eigenspace; traces of
// N, N^2, N^3 determine the elementary symmetric functions.
RationalFunction restricted_char_discriminant(const Mat6& N) {
    RationalFunction p1 = mat_trace(N);
    Mat6 N2 = mat_mul(N, N);
    RationalFunction p2 = mat_trace(N2);
    RationalFunction p3 = mat_trace(mat_mul(N2, N));
    RationalFunction half(Rational(1, 2)), sixth(Rational(1, 6));
    RationalFunction e1 = p1;
    RationalFunction e2 = (p1 * p1 - p2) * half;
    RationalFunction e3 = (p1 * p1 * p1 - RationalFunction(Rational(3)) * p1 * p2 +
                           RationalFunction(Rational(2)) * p3) *
                          sixth;
    // disc(t^3 - e1 t^2 + e2 t - e3)
    RationalFunction c18(Rational(18)), c4(Rational(4)), c27(Rational(27));
    return c18 * e1 * e2 * e3 - c4 * e1 * e1 * e1 * e3 + e1 * e1 * e2 * e2 - c4 * e2 * e2 * e2 -
           c27 * e3 * e3;
}

} // namespace

Tensor weyl_tensor(const Tensor& g, const CurvatureBundle& cb) {
    const int n = g.dim();
    if (n != 4) throw malformed_error("Weyl tensor requires a 4-dimensional chart");
    // P chosen so that W = Rlow - P (^) g is totally tracefree for this
    // Riemann sign convention: P = -(Ric - s g/6)/2.
    Tensor P(g.chart(), 0, 2, Sym::symmetric);
    RationalFunction s6 = cb.scalar / RationalFunction(Rational(6));
    RationalFunction mhalf(Rational(-1, 2));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P.at({i, j}) = (cb.ricci.at({i, j}) - s6 * g.at({i, j})) * mhalf;
    Tensor W(g.chart(), 0, 4);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RationalFunction kn = P.at({i, k}) * g.at({j, l}) - P.at({j, k}) * g.at({i, l}) -
                                          P.at({i, l}) * g.at({j, k}) + P.at({j, l}) * g.at({i, k});
                    RationalFunction w = cb.riemann_low.at({i, j, k, l}) - kn;
                    W.at({i, j, k, l}) = w;
                    W.at({j, i, k, l}) = -w;
                }
    return W;
}

Tensor hodge_star2(const Tensor& g, const Tensor& form2) {
    if (g.dim() != 4) throw malformed_error("Hodge star requires a 4-dimensional chart");
    Tensor ginv = metric_inverse(g);
    auto S = star_matrix(g, ginv);
    Tensor out(g.chart(), 0, 2, Sym::antisymmetric);
    for (int P = 0; P < 6; ++P) {
        RationalFunction v;
        for (int Q = 0; Q < 6; ++Q) {
            const RationalFunction& e = form2.at({kPairs[Q][0], kPairs[Q][1]});
            if (e.is_zero() || S[static_cast<std::size_t>(P)][static_cast<std::size_t>(Q)].is_zero())
                continue;
            v = v + S[static_cast<std::size_t>(P)][static_cast<std::size_t>(Q)] * e;
        }
        out.at({kPairs[P][0], kPairs[P][1]}) = v;
        out.at({kPairs[P][1], kPairs[P][0]}) = -v;
    }
    return out;
}

namespace {

// Left Hodge star on the first index pair of a (0,4) Weyl-type tensor.
Tensor left_star(const Tensor& W, const Tensor& g, const Tensor& ginv) {
    auto S = star_matrix(g, ginv);
    Tensor out(g.chart(), 0, 4);
    for (int P = 0; P < 6; ++P) {
        int i = kPairs[P][0], j = kPairs[P][1];
        for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
                RationalFunction v;
                for (int Q = 0; Q < 6; ++Q) {
                    const RationalFunction& w = W.at({kPairs[Q][0], kPairs[Q][1], k, l});
                    if (w.is_zero()) continue;
                    v = v + S[static_cast<std::size_t>(P)][static_cast<std::size_t>(Q)] * w;
                }
                out.at({i, j, k, l}) = v;
                out.at({j, i, k, l}) = -v;
            }
    }
    return out;
}

} // namespace

WeylSplit weyl_split(const Tensor& g) {
    require_metric(g);
    if (g.dim() != 4) throw malformed_error("weyl_split requires a 4-dimensional chart");
    CurvatureBundle cb = curvature(g);
    Tensor W = weyl_tensor(g, cb);
    Tensor ginv = metric_inverse(g);
    Tensor sw = left_star(W, g, ginv);
    RationalFunction half(Rational(1, 2));
    Tensor wplus = (W + sw).scaled(half);
    Tensor wminus = (W - sw).scaled(half);

    auto S = star_matrix(g, ginv);
    Mat6 Wop = weyl_operator(W, ginv);
    // projector matrices (1 +- S)/2
    Mat6 Pp(6, std::vector<RationalFunction>(6)), Pm(6, std::vector<RationalFunction>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            RationalFunction id = (i == j) ? RationalFunction(Rational(1)) : RationalFunction();
            Pp[i][j] = (id + S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * half;
            Pm[i][j] = (id - S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * half;
        }
    Mat6 Np = mat_mul(Wop, Pp);
    Mat6 Nm = mat_mul(Wop, Pm);
    WeylSplit out{std::move(wplus), std::move(wminus), false, false};
    out.degenerate_plus = restricted_char_discriminant(Np).is_zero();
    out.degenerate_minus = restricted_char_discriminant(Nm).is_zero();
    return out;
}

namespace {

// (W * b)_{ij} = g^{cd} g^{mm'} W(i,c,j,m') b_{md}
Tensor weyl_star_action(const Tensor& W, const Tensor& b, const Tensor& ginv) {
    Tensor out(W.chart(), 0, 2, Sym::symmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            RationalFunction s;
            for (int c = 0; c < 4; ++c)
                for (int mp = 0; mp < 4; ++mp) {
                    const RationalFunction& w = W.at({i, c, j, mp});
                    if (w.is_zero()) continue;
                    RationalFunction inner;
                    for (int d = 0; d < 4; ++d)
                        for (int m = 0; m < 4; ++m) {
                            if (ginv.at({c, d}).is_zero() || ginv.at({m, mp}).is_zero() ||
                                b.at({m, d}).is_zero())
                                continue;
                            inner = inner + ginv.at({c, d}) * ginv.at({m, mp}) * b.at({m, d});
                        }
                    s = s + w * inner;
                }
            out.at({i, j}) = s;
        }
    return out;
}

// delta delta W: (ddW)_{jk} = g^{ci} g^{dl} D_i D_l W(c, j, k, d)
Tensor double_divergence(const Tensor& W, const Tensor& g, const Tensor& ginv,
                         const Tensor& christoffel) {
    Tensor dW = covariant_derivative(christoffel, W); // (D; c, j, k, d)
    // first contraction over (D, d): V(c, j, k) = g^{Dd} dW(D; c, j, k, d)
    Tensor V(g.chart(), 0, 3);
    for (int c = 0; c < 4; ++c)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                RationalFunction s;
                for (int D = 0; D < 4; ++D)
                    for (int d = 0; d < 4; ++d) {
                        if (ginv.at({D, d}).is_zero()) continue;
                        const RationalFunction& w = dW.at({D, c, j, k, d});
                        if (w.is_zero()) continue;
                        s = s + ginv.at({D, d}) * w;
                    }
                V.at({c, j, k}) = s;
            }
    Tensor dV = covariant_derivative(christoffel, V); // (D; c, j, k)
    Tensor out(g.chart(), 0, 2, Sym::symmetric);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            RationalFunction s;
            for (int D = 0; D < 4; ++D)
                for (int c = 0; c < 4; ++c) {
                    if (ginv.at({D, c}).is_zero()) continue;
                    const RationalFunction& w = dV.at({D, c, j, k});
                    if (w.is_zero()) continue;
                    s = s + ginv.at({D, c}) * w;
                }
            out.at({j, k}) = s;
        }
    return out;
}

} // namespace

Tensor bach(const Tensor& g) {
    require_metric(g);
    if (g.dim() != 4) throw malformed_error("Bach tensor requires a 4-dimensional chart");
    CurvatureBundle cb = curvature(g);
    Tensor ginv = metric_inverse(g);
    Tensor W = weyl_tensor(g, cb);
    Tensor sw = left_star(W, g, ginv);
    RationalFunction half(Rational(1, 2));
    Tensor wplus = (W + sw).scaled(half);
    Tensor wminus = (W - sw).scaled(half);
    Tensor r0 = ricci0(g, cb);

    // The *-action below evaluates sum_i b(W_{X,e_i}Y, e_i) under THIS
    // engine's curvature sign R(X,Y) = [D_X, D_Y] - D_[X,Y]; the usual
    // convention behind this formula has the opposite operator sign, so the
    // action enters with a minus here.  All three expressions are asserted equal.
    Tensor B = double_divergence(W, g, ginv, cb.christoffel) -
               weyl_star_action(W, r0, ginv).scaled(half);
    Tensor Bp = double_divergence(wplus, g, ginv, cb.christoffel).scaled(RationalFunction(Rational(2))) -
                weyl_star_action(wplus, r0, ginv);
    Tensor Bm = double_divergence(wminus, g, ginv, cb.christoffel).scaled(RationalFunction(Rational(2))) -
                weyl_star_action(wminus, r0, ginv);
    if (!(B - Bp).is_zero() || !(B - Bm).is_zero())
        throw internal_error("bach: half-Weyl expressions disagree with the full expression");
    B.set_sym(Sym::symmetric);
    if (!B.symmetry_ok()) throw internal_error("bach: result not symmetric");
    RationalFunction tr;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (ginv.at({i, j}).is_zero()) continue;
            tr = tr + ginv.at({i, j}) * B.at({i, j});
        }
    if (!tr.is_zero()) throw internal_error("bach: result not tracefree");
    return B;
}

bool is_hermitian_pair(const Tensor& g, const Tensor& J) {
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction jj;
            for (int m = 0; m < n; ++m) jj = jj + J.at({i, m}) * J.at({m, j});
            if (i == j) jj = jj + RationalFunction(Rational(1));
            if (!jj.is_zero()) return false;
            RationalFunction gj;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (J.at({a, i}).is_zero() || J.at({b, j}).is_zero()) continue;
                    gj = gj + g.at({a, b}) * J.at({a, i}) * J.at({b, j});
                }
            if (gj != g.at({i, j})) return false;
        }
    return true;
}

Tensor kaehler_form(const Tensor& g, const Tensor& J) {
    const int n = g.dim();
    Tensor w(g.chart(), 0, 2, Sym::antisymmetric);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction s;
            for (int m = 0; m < n; ++m) {
                if (J.at({m, i}).is_zero() || g.at({m, j}).is_zero()) continue;
                s = s + J.at({m, i}) * g.at({m, j});
            }
            w.at({i, j}) = s;
        }
    if (!w.symmetry_ok()) throw malformed_error("kaehler_form: g(J.,.) is not antisymmetric");
    return w;
}

Tensor lee_form(const Tensor& g, const Tensor& J) {
    if (!is_hermitian_pair(g, J)) throw malformed_error("lee_form: (g, J) is not a hermitian pair");
    const int n = g.dim();
    if (n != 4) throw malformed_error("lee_form requires a 4-dimensional chart");
    Tensor w = kaehler_form(g, J);
    Tensor dw = exterior_derivative(w);
    // solve d omega = -2 theta ^ omega; 4 equations (one per coordinate
    // triple), 4 unknowns; wedging with a nondegenerate omega is injective.
    // Build the linear system A theta = rhs.
    std::vector<std::array<int, 3>> triples = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::vector<std::vector<RationalFunction>> A(4, std::vector<RationalFunction>(4));
    std::vector<RationalFunction> rhs(4);
    for (int r = 0; r < 4; ++r) {
        auto [i, j, k] = triples[static_cast<std::size_t>(r)];
        // (theta ^ omega)_{ijk} = theta_i w_jk - theta_j w_ik + theta_k w_ij
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = w.at({j, k}) * RationalFunction(Rational(-2));
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = w.at({i, k}) * RationalFunction(Rational(2));
        A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = w.at({i, j}) * RationalFunction(Rational(-2));
        rhs[static_cast<std::size_t>(r)] = dw.at({i, j, k});
    }
    // Gaussian elimination over the rational function field.
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (!A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw malformed_error("lee_form: degenerate fundamental form");
        std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(pivot)]);
        std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) continue;
            RationalFunction f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                 A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = 0; c < 4; ++c)
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] =
                rhs[static_cast<std::size_t>(r)] - f * rhs[static_cast<std::size_t>(col)];
        }
    }
    Tensor theta(g.chart(), 0, 1);
    for (int i = 0; i < 4; ++i)
        theta.at({i}) = rhs[static_cast<std::size_t>(i)] /
                        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    // defining property, asserted exactly
    Tensor resid = dw + wedge12(theta, w).scaled(RationalFunction(Rational(2)));
    if (!resid.is_zero()) throw internal_error("lee_form: d omega != -2 theta ^ omega");
    return theta;
}

Tensor killing_vector_residual(const Tensor& g, const Tensor& K) {
    const int n = g.dim();
    Tensor out(g.chart(), 0, 2, Sym::symmetric);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            RationalFunction s;
            for (int m = 0; m < n; ++m) {
                if (!K.at({m}).is_zero()) s = s + K.at({m}) * g.coord_derivative(g.at({i, j}), m);
                s = s + g.at({m, j}) * g.coord_derivative(K.at({m}), i) +
                    g.at({i, m}) * g.coord_derivative(K.at({m}), j);
            }
            out.at({i, j}) = s;
            out.at({j, i}) = s;
        }
    return out;
}

Tensor killing_tensor_residual(const Tensor& g, const Tensor& S) {
    CurvatureBundle cb = curvature(g);
    Tensor dS = covariant_derivative(cb.christoffel, S); // (a; i, j)
    const int n = g.dim();
    Tensor out(g.chart(), 0, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                out.at({i, j, k}) = dS.at({i, j, k}) + dS.at({j, k, i}) + dS.at({k, i, j});
    return out;
}

Tensor nijenhuis(const Tensor& J) {
    const int n = J.dim();
    Tensor N(J.chart(), 1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RationalFunction s;
                for (int m = 0; m < n; ++m) {
                    if (!J.at({m, i}).is_zero())
                        s = s + J.at({m, i}) * J.coord_derivative(J.at({k, j}), m);
                    if (!J.at({m, j}).is_zero())
                        s = s - J.at({m, j}) * J.coord_derivative(J.at({k, i}), m);
                    s = s - J.at({k, m}) * (J.coord_derivative(J.at({m, j}), i) -
                                            J.coord_derivative(J.at({m, i}), j));
                }
                N.at({k, i, j}) = s;
                N.at({k, j, i}) = -s;
            }
    return N;
}

Tensor gradient(const Tensor& g, const RationalFunction& f) {
    const int n = g.dim();
    Tensor ginv = metric_inverse(g);
    Tensor df(g.chart(), 0, 1);
    for (int i = 0; i < n; ++i) df.at({i}) = g.coord_derivative(f, i);
    Tensor K(g.chart(), 1, 0);
    for (int i = 0; i < n; ++i) {
        RationalFunction s;
        for (int j = 0; j < n; ++j) {
            if (ginv.at({i, j}).is_zero() || df.at({j}).is_zero()) continue;
            s = s + ginv.at({i, j}) * df.at({j});
        }
        K.at({i}) = s;
    }
    return K;
}

Tensor j_gradient(const Tensor& g, const Tensor& J, const RationalFunction& f) {
    Tensor G = gradient(g, f);
    const int n = g.dim();
    Tensor K(g.chart(), 1, 0);
    for (int i = 0; i < n; ++i) {
        RationalFunction s;
        for (int m = 0; m < n; ++m) {
            if (J.at({i, m}).is_zero() || G.at({m}).is_zero()) continue;
            s = s + J.at({i, m}) * G.at({m});
        }
        K.at({i}) = s;
    }
    return K;
}

Tensor symplectic_gradient(const Tensor& omega, const RationalFunction& f) {
    // solve i_K omega = -df  (4x4 or 2x2 linear system, omega nondegenerate)
    const int n = omega.dim();
    std::vector<std::vector<RationalFunction>> A(static_cast<std::size_t>(n),
                                                 std::vector<RationalFunction>(static_cast<std::size_t>(n)));
    std::vector<RationalFunction> rhs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = omega.at({i, j});
        rhs[static_cast<std::size_t>(j)] = -omega.coord_derivative(f, j);
    }
    // Gaussian elimination
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw degenerate_error("symplectic_gradient: degenerate 2-form");
        std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(pivot)]);
        std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
        for (int r = 0; r < n; ++r) {
            if (r == col || A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) continue;
            RationalFunction f2 = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                  A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int c = 0; c < n; ++c)
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    f2 * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] =
                rhs[static_cast<std::size_t>(r)] - f2 * rhs[static_cast<std::size_t>(col)];
        }
    }
    Tensor K(omega.chart(), 1, 0);
    for (int i = 0; i < n; ++i)
        K.at({i}) = rhs[static_cast<std::size_t>(i)] /
                    A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return K;
}

Tensor j_pullback(const Tensor& J, const Tensor& alpha) {
    const int n = J.dim();
    Tensor out(J.chart(), 0, 1);
    for (int j = 0; j < n; ++j) {
        RationalFunction s;
        for (int m = 0; m < n; ++m) {
            if (alpha.at({m}).is_zero() || J.at({m, j}).is_zero()) continue;
            s = s + alpha.at({m}) * J.at({m, j});
        }
        out.at({j}) = s;
    }
    return out;
}

Tensor divergence_sym2(const Tensor& g, const Tensor& christoffel, const Tensor& T) {
    Tensor dT = covariant_derivative(christoffel, T);
    Tensor ginv = metric_inverse(g);
    const int n = g.dim();
    Tensor out(g.chart(), 0, 1);
    for (int j = 0; j < n; ++j) {
        RationalFunction s;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (ginv.at({a, b}).is_zero()) continue;
                const RationalFunction& w = dT.at({a, b, j});
                if (w.is_zero()) continue;
                s = s + ginv.at({a, b}) * w;
            }
        out.at({j}) = s;
    }
    return out;
}

Tensor hamiltonian_form_residual(const Tensor& g, const Tensor& J, const Tensor& phi) {
    if (!is_hermitian_pair(g, J))
        throw malformed_error("hamiltonian_form_residual: (g, J) is not a hermitian pair");
    const int n = g.dim();
    // J-invariance of phi
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RationalFunction s;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (J.at({a, i}).is_zero() || J.at({b, j}).is_zero() || phi.at({a, b}).is_zero())
                        continue;
                    s = s + phi.at({a, b}) * J.at({a, i}) * J.at({b, j});
                }
            if (s != phi.at({i, j}))
                throw malformed_error("hamiltonian_form_residual: phi is not J-invariant");
        }
    CurvatureBundle cb = curvature(g);
    Tensor ginv = metric_inverse(g);
    Tensor omega = kaehler_form(g, J);
    // sigma = tr_omega phi = phi_{ij} omega^{ij} / 2
    RationalFunction sigma;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (phi.at({i, j}).is_zero()) continue;
            RationalFunction wij;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (ginv.at({i, a}).is_zero() || ginv.at({j, b}).is_zero() ||
                        omega.at({a, b}).is_zero())
                        continue;
                    wij = wij + ginv.at({i, a}) * ginv.at({j, b}) * omega.at({a, b});
                }
            sigma = sigma + phi.at({i, j}) * wij;
        }
    sigma = sigma * RationalFunction(Rational(1, 2));
    Tensor dsigma(g.chart(), 0, 1);
    for (int i = 0; i < n; ++i) dsigma.at({i}) = g.coord_derivative(sigma, i);
    // (J dsigma)(Y) = -dsigma(JY)
    Tensor jds = j_pullback(J, dsigma);
    for (int i = 0; i < n; ++i) jds.at({i}) = -jds.at({i});
    Tensor dphi = covariant_derivative(cb.christoffel, phi); // (a; i, j)
    Tensor out(g.chart(), 0, 3);
    RationalFunction half(Rational(1, 2));
    for (int a = 0; a < n; ++a) {
        // X = d_a: Xb_j = g_{aj}, (JX)b_j = omega_{aj}
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                RationalFunction rhs = dsigma.at({i}) * omega.at({a, j}) -
                                       dsigma.at({j}) * omega.at({a, i}) -
                                       jds.at({i}) * g.at({a, j}) + jds.at({j}) * g.at({a, i});
                out.at({a, i, j}) = dphi.at({a, i, j}) - rhs * half;
            }
    }
    return out;
}

} // namespace ambitoric
