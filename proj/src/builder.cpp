#include "ambitoric/builder.hpp"

namespace ambitoric {

const char* form_type_name(FormType t) {
    switch (t) {
    case FormType::parabolic: return "parabolic";
    case FormType::hyperbolic: return "hyperbolic";
    case FormType::elliptic: return "elliptic";
    case FormType::general: return "general";
    }
    return "?";
}

std::optional<FormType> form_type_by_name(std::string_view name) {
    if (name == "parabolic") return FormType::parabolic;
    if (name == "hyperbolic") return FormType::hyperbolic;
    if (name == "elliptic") return FormType::elliptic;
    if (name == "general") return FormType::general;
    return std::nullopt;
}

QuadraticForm AmbitoricSpec::canonical_q(FormType t) {
    switch (t) {
    case FormType::parabolic: return {Rational(0), Rational(0), Rational(1)};
    case FormType::hyperbolic: return {Rational(0), Rational(1), Rational(0)}; // q(z) = 2z
    case FormType::elliptic: return {Rational(1), Rational(0), Rational(1)};
    case FormType::general: break;
    }
    throw malformed_error("general type has no canonical quadratic");
}

AmbitoricSpec AmbitoricSpec::make(FormType t, BinaryForm A, BinaryForm B,
                                  std::optional<QuadraticForm> p,
                                  std::optional<QuadraticForm> general_q) {
    AmbitoricSpec s;
    s.type = t;
    s.q = (t == FormType::general) ? general_q.value_or(QuadraticForm{}) : canonical_q(t);
    s.A = std::move(A);
    s.B = std::move(B);
    s.p = std::move(p);
    s.validate();
    return s;
}

void AmbitoricSpec::validate() const {
    if (type == FormType::general) {
        if (q.is_zero()) throw malformed_error("general type requires a nonzero quadratic q");
    } else if (q != canonical_q(type)) {
        throw malformed_error("named type carries its canonical quadratic");
    }
    if (A.bound != 4 || B.bound != 4) throw malformed_error("A and B must have degree bound 4");
    if (A.is_zero() && B.is_zero()) throw degenerate_error("A and B must not both be zero");
    if (p && !inner_product(*p, q).is_zero())
        throw malformed_error("p must be orthogonal to q: <p,q> != 0");
    if (p && p->is_zero()) throw malformed_error("p must be nonzero");
}

DtauMap dtau_map(const QuadraticForm& q) {
    DtauMap M;
    for (auto& row : M.m) row[0] = row[1] = Rational(0);
    if (!q.q1.is_zero()) {
        // dtau2 = dt1, dtau0 = dt2, dtau1 = (q0 dt1 + q2 dt2)/(2 q1)
        M.m[0][1] = Rational(1);
        M.m[1][0] = q.q0 / (Rational(2) * q.q1);
        M.m[1][1] = q.q2 / (Rational(2) * q.q1);
        M.m[2][0] = Rational(1);
    } else if (!q.q0.is_zero()) {
        // dtau0 = dt2, dtau1 = dt1, dtau2 = -(q2/q0) dt2
        M.m[0][1] = Rational(1);
        M.m[1][0] = Rational(1);
        M.m[2][1] = -(q.q2 / q.q0);
    } else if (!q.q2.is_zero()) {
        // dtau0 = 0, dtau1 = dt2/2, dtau2 = dt1
        M.m[1][1] = Rational(1, 2);
        M.m[2][0] = Rational(1);
    } else {
        throw malformed_error("dtau_map: q = 0");
    }
    return M;
}

namespace {

// beta(w) = w^2 dtau0 + 2w dtau1 + dtau2 as a pair of polynomial
// coefficients on (dt1, dt2), w one of the variables x, y.
std::array<Polynomial, 2> beta_form(const DtauMap& M, int var) {
    Polynomial w = Polynomial::variable(var);
    std::array<Polynomial, 2> out;
    for (int t = 0; t < 2; ++t) {
        out[static_cast<std::size_t>(t)] = w * w * Polynomial::constant(M.m[0][t]) +
                                           w * Polynomial::constant(Rational(2) * M.m[1][t]) +
                                           Polynomial::constant(M.m[2][t]);
    }
    return out;
}

Tensor raise_form_to_j(const Tensor& g, const Tensor& omega) {
    // J^l_i = omega_{ij} g^{jl}
    Tensor ginv = metric_inverse(g);
    const int n = g.dim();
    Tensor J(g.chart(), 1, 1);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            RationalFunction s;
            for (int j = 0; j < n; ++j) {
                if (omega.at({i, j}).is_zero() || ginv.at({j, l}).is_zero()) continue;
                s = s + omega.at({i, j}) * ginv.at({j, l});
            }
            J.at({l, i}) = s;
        }
    return J;
}

void verify_model(const AmbitoricModel& m) {
    // J^2 = -Id, hermitian compatibility, omega = g(J.,.), closedness,
    // conformal relations: every structural claim of the construction.
    if (!is_hermitian_pair(m.gplus, m.Jplus)) throw internal_error("build: (g+, J+) not hermitian");
    if (!is_hermitian_pair(m.gminus, m.Jminus)) throw internal_error("build: (g-, J-) not hermitian");
    if (!(kaehler_form(m.gplus, m.Jplus) - m.omegaplus).is_zero())
        throw internal_error("build: omega+ != g+(J+.,.)");
    if (!(kaehler_form(m.gminus, m.Jminus) - m.omegaminus).is_zero())
        throw internal_error("build: omega- != g-(J-.,.)");
    if (!exterior_derivative(m.omegaplus).is_zero()) throw internal_error("build: d omega+ != 0");
    if (!exterior_derivative(m.omegaminus).is_zero()) throw internal_error("build: d omega- != 0");
    RationalFunction f2 = m.f * m.f;
    if (!(m.gplus.scaled(f2) - m.gminus).is_zero()) throw internal_error("build: g- != f^2 g+");
    if (!(m.gplus.scaled(m.f) - m.g0).is_zero()) throw internal_error("build: g0 != f g+");
}

} // namespace

AmbitoricModel build(const AmbitoricSpec& spec) {
    spec.validate();
    if (spec.A.is_zero() || spec.B.is_zero())
        throw degenerate_error("degenerate input: A or B identically zero");

    AmbitoricModel m;
    m.spec = spec;
    m.dtau = dtau_map(spec.q);

    Polynomial x = Polynomial::variable(VX), y = Polynomial::variable(VY);
    m.Ax = spec.A.p.substitute(VZ, x);
    m.By = spec.B.p.substitute(VZ, y);
    m.qxy = spec.q.polarize_poly();
    m.diff_xy = x - y;

    auto bx = beta_form(m.dtau, VX); // x^2 dtau0 + 2x dtau1 + dtau2
    auto by = beta_form(m.dtau, VY);

    RationalFunction A(m.Ax), B(m.By);
    RationalFunction den(m.diff_xy * m.qxy);
    RationalFunction f(m.qxy, m.diff_xy);
    RationalFunction q2(m.qxy * m.qxy);
    RationalFunction d2(m.diff_xy * m.diff_xy);

    // components over (x, y, t1, t2); torus coframe pieces E2 = beta_y/den,
    // E4 = beta_x/den
    RationalFunction E2[2], E4[2];
    for (int t = 0; t < 2; ++t) {
        E2[t] = RationalFunction(by[static_cast<std::size_t>(t)]) / den;
        E4[t] = RationalFunction(bx[static_cast<std::size_t>(t)]) / den;
    }

    // g0 = dx^2/A + dy^2/B + A E2^2 + B E4^2
    RationalFunction g0c[4][4];
    g0c[0][0] = RationalFunction(Rational(1)) / A;
    g0c[1][1] = RationalFunction(Rational(1)) / B;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) g0c[2 + s][2 + t] = A * E2[s] * E2[t] + B * E4[s] * E4[t];

    // omega+ = (dx ^ beta_y + dy ^ beta_x)/q(x,y)^2
    // omega- = (dx ^ beta_y - dy ^ beta_x)/(x-y)^2
    RationalFunction wp[4][4], wm[4][4];
    for (int t = 0; t < 2; ++t) {
        RationalFunction byt{by[static_cast<std::size_t>(t)]}, bxt{bx[static_cast<std::size_t>(t)]};
        wp[0][2 + t] = byt / q2;
        wp[1][2 + t] = bxt / q2;
        wm[0][2 + t] = byt / d2;
        wm[1][2 + t] = -(bxt / d2);
    }

    // orientation: the complex orientation of J+, i.e. the sign making
    // sqrt(det g+) equal to the coefficient of omega+ ^ omega+ / 2
    RationalFunction finv = RationalFunction(Rational(1)) / f;
    auto gp_of = [&](int i, int j) { return g0c[i][j] * finv; };
    // det(g+): block diagonal (x,y) x (t1,t2)
    RationalFunction det_gp = gp_of(0, 0) * gp_of(1, 1) *
                              (gp_of(2, 2) * gp_of(3, 3) - gp_of(2, 3) * gp_of(2, 3));
    auto root = det_gp.sqrt();
    if (!root) throw internal_error("build: det g+ is not a perfect square");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            wp[j][i] = -wp[i][j];
            wm[j][i] = -wm[i][j];
        }
    RationalFunction vplus = wp[0][1] * wp[2][3] - wp[0][2] * wp[1][3] + wp[0][3] * wp[1][2];
    int orientation;
    if (vplus == *root)
        orientation = +1;
    else if (vplus == -*root)
        orientation = -1;
    else
        throw internal_error("build: omega+ volume does not match sqrt(det g+)");

    m.chart = Chart({"x", "y", "t1", "t2"}, {VX, VY, std::nullopt, std::nullopt}, orientation);
    m.f = f;

    m.g0 = Tensor(m.chart, 0, 2, Sym::symmetric);
    m.gplus = Tensor(m.chart, 0, 2, Sym::symmetric);
    m.gminus = Tensor(m.chart, 0, 2, Sym::symmetric);
    m.omegaplus = Tensor(m.chart, 0, 2, Sym::antisymmetric);
    m.omegaminus = Tensor(m.chart, 0, 2, Sym::antisymmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m.g0.at({i, j}) = g0c[i][j];
            m.gplus.at({i, j}) = g0c[i][j] * finv;
            m.gminus.at({i, j}) = g0c[i][j] * f;
            m.omegaplus.at({i, j}) = wp[i][j];
            m.omegaminus.at({i, j}) = wm[i][j];
        }

    m.Jplus = raise_form_to_j(m.gplus, m.omegaplus);
    m.Jminus = raise_form_to_j(m.gminus, m.omegaminus);
    verify_model(m);
    return m;
}

QuadraticForm half_bracket(const QuadraticForm& q, const QuadraticForm& w) {
    QuadraticForm b = poisson_bracket(q, w);
    Rational half(1, 2);
    return {b.q0 * half, b.q1 * half, b.q2 * half};
}

QuadraticForm w_from_p(const QuadraticForm& q, const QuadraticForm& p) {
    if (!inner_product(p, q).is_zero()) throw malformed_error("w_from_p: p not orthogonal to q");
    // {q,w}/2 = (q0 w1 - q1 w0,  (q0 w2 - q2 w0)/2,  q1 w2 - q2 w1) = p.
    // Solve one case at a time; solution defined modulo multiples of q.
    if (!q.q0.is_zero()) {
        // set w0 = 0: w1 = p0/q0, w2 = 2 p1/q0; consistency with the last
        // component follows from <p,q> = 0
        QuadraticForm w{Rational(0), p.q0 / q.q0, Rational(2) * p.q1 / q.q0};
        if (half_bracket(q, w) != p) throw internal_error("w_from_p: inconsistent solve");
        return w;
    }
    if (!q.q1.is_zero()) {
        // q0 = 0: p0 = -q1 w0, p2... = q1 w2 - q2 w1; set w1 = 0
        QuadraticForm w{-(p.q0 / q.q1), Rational(0), p.q2 / q.q1};
        if (half_bracket(q, w) != p) throw internal_error("w_from_p: inconsistent solve");
        return w;
    }
    // q0 = q1 = 0, q2 != 0
    QuadraticForm w{-(Rational(2) * p.q1 / q.q2), -(p.q2 / q.q2), Rational(0)};
    if (half_bracket(q, w) != p) throw internal_error("w_from_p: inconsistent solve");
    return w;
}

Tensor killing_field(const AmbitoricModel& model, const QuadraticForm& p) {
    if (!inner_product(p, model.spec.q).is_zero())
        throw malformed_error("killing_field: p not orthogonal to q");
    const auto& M = model.dtau.m;
    // solve M [a;b] = (p0, p1, p2) using two independent rows
    Rational pr[3] = {p.q0, p.q1, p.q2};
    int r0 = -1, r1 = -1;
    for (int i = 0; i < 3 && r1 < 0; ++i)
        for (int j = i + 1; j < 3 && r1 < 0; ++j) {
            Rational det = M[i][0] * M[j][1] - M[i][1] * M[j][0];
            if (!det.is_zero()) { r0 = i; r1 = j; }
        }
    if (r1 < 0) throw internal_error("killing_field: dtau map is rank-deficient");
    Rational det = M[r0][0] * M[r1][1] - M[r0][1] * M[r1][0];
    Rational a = (pr[r0] * M[r1][1] - pr[r1] * M[r0][1]) / det;
    Rational b = (M[r0][0] * pr[r1] - M[r1][0] * pr[r0]) / det;
    for (int i = 0; i < 3; ++i)
        if (M[i][0] * a + M[i][1] * b != pr[i])
            throw malformed_error("killing_field: p not in the image of dtau");
    Tensor K(model.chart, 1, 0);
    K.at({2}) = RationalFunction(Rational(a));
    K.at({3}) = RationalFunction(Rational(b));
    return K;
}

namespace {

void assert_momentum(const AmbitoricModel& model, const RationalFunction& mu,
                     const QuadraticForm& p, const Tensor& omega, const char* what) {
    Tensor K = killing_field(model, p);
    Tensor ik = interior(K, omega);
    for (int j = 0; j < 4; ++j) {
        RationalFunction dj = model.g0.coord_derivative(mu, j);
        if (!(dj + ik.at({j})).is_zero())
            throw internal_error(std::string(what) + ": d mu != -i_K omega");
    }
}

} // namespace

RationalFunction momentum_plus(const AmbitoricModel& model, const QuadraticForm& w) {
    RationalFunction mu(-w.polarize_poly(), model.qxy);
    assert_momentum(model, mu, half_bracket(model.spec.q, w), model.omegaplus, "momentum_plus");
    return mu;
}

RationalFunction momentum_minus(const AmbitoricModel& model, const QuadraticForm& p,
                                const Rational& c) {
    if (!inner_product(p, model.spec.q).is_zero())
        throw malformed_error("momentum_minus: p not orthogonal to q");
    Polynomial num = -(p.polarize_poly() + model.diff_xy.scaled(c));
    RationalFunction mu(num, model.diff_xy);
    assert_momentum(model, mu, p, model.omegaminus, "momentum_minus");
    return mu;
}

Tensor symplectic_potential(const AmbitoricModel& model) {
    Polynomial x = Polynomial::variable(VX), y = Polynomial::variable(VY);
    Polynomial basis[3] = {x * y, x + y, Polynomial::integer(1)};
    Tensor chi(model.chart, 0, 1);
    for (int t = 0; t < 2; ++t) {
        Polynomial num;
        for (int i = 0; i < 3; ++i) num += basis[i].scaled(model.dtau.m[i][t]);
        chi.at({2 + t}) = RationalFunction(num, model.diff_xy);
    }
    Tensor resid = exterior_derivative(chi) + model.omegaminus;
    if (!resid.is_zero()) throw internal_error("symplectic_potential: d chi != -omega-");
    return chi;
}

CalabiModel build_calabi(const BinaryForm& V, const Rational& k) {
    if (V.bound > 4) throw malformed_error("build_calabi: V must have degree <= 4");
    if (V.is_zero()) throw degenerate_error("build_calabi: V identically zero");

    CalabiModel m;
    m.V = V;
    m.k = k;
    // Vbar(zbar) = zbar^4 V(1/zbar): reversed coefficients
    {
        Polynomial vb;
        for (int i = 0; i <= 4; ++i) {
            Polynomial ci = V.p.coefficient_of(VZ, i);
            vb += Polynomial::monomial(mono_make(VZ, 4 - i), ci.constant_value());
        }
        m.Vbar = BinaryForm(4, vb);
    }

    Polynomial z = Polynomial::variable(VZ), u = Polynomial::variable(VU),
               v = Polynomial::variable(VV);
    Polynomial D = Polynomial::integer(1) + (u * u + v * v).scaled(k / Rational(4));
    RationalFunction Dm2(Polynomial::integer(1), D * D);

    // alpha = (u dv - v du)/(2D): d alpha = omega_Sigma = du^dv / D^2
    RationalFunction phi(Polynomial::integer(1), D.scaled(Rational(2)));

    // chart (z, t, u, v); indices 0..3
    RationalFunction Vz(V.p);
    if (Vz.is_zero()) throw degenerate_error("build_calabi: V identically zero");
    RationalFunction zr{Polynomial::variable(VZ)};

    RationalFunction gp[4][4], wp[4][4];
    RationalFunction alpha_u = -(RationalFunction(v) * phi);
    RationalFunction alpha_v = RationalFunction(u) * phi;
    RationalFunction Voz = Vz / zr; // V/z
    // g+ = z gSigma + (z/V) dz^2 + (V/z)(dt + alpha)^2
    gp[0][0] = zr / Vz;
    gp[1][1] = Voz;
    gp[1][2] = Voz * alpha_u;
    gp[1][3] = Voz * alpha_v;
    gp[2][2] = zr * Dm2 + Voz * alpha_u * alpha_u;
    gp[2][3] = Voz * alpha_u * alpha_v;
    gp[3][3] = zr * Dm2 + Voz * alpha_v * alpha_v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) gp[i][j] = gp[j][i];

    // omega+ = z omega_Sigma + dz ^ (dt + alpha)
    wp[0][1] = RationalFunction(Rational(1));
    wp[0][2] = alpha_u;
    wp[0][3] = alpha_v;
    wp[2][3] = zr * Dm2;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) wp[j][i] = -wp[i][j];

    // orientation from sqrt(det g+) = coefficient of omega+^omega+/2
    Chart chart({"z", "t", "u", "v"}, {VZ, std::nullopt, VU, VV}, +1);
    Tensor gplus(chart, 0, 2, Sym::symmetric), omegaplus(chart, 0, 2, Sym::antisymmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            gplus.at({i, j}) = gp[i][j];
            omegaplus.at({i, j}) = wp[i][j];
        }
    RationalFunction vol = wp[0][1] * wp[2][3] - wp[0][2] * wp[1][3] + wp[0][3] * wp[1][2];
    auto root = metric_det(gplus).sqrt();
    if (!root) throw internal_error("build_calabi: det g+ not a perfect square");
    int orientation;
    if (vol == *root)
        orientation = +1;
    else if (vol == -*root)
        orientation = -1;
    else
        throw internal_error("build_calabi: omega+ volume mismatch");
    if (orientation < 0) {
        chart = Chart({"z", "t", "u", "v"}, {VZ, std::nullopt, VU, VV}, -1);
        Tensor g2(chart, 0, 2, Sym::symmetric), w2(chart, 0, 2, Sym::antisymmetric);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                g2.at({i, j}) = gp[i][j];
                w2.at({i, j}) = wp[i][j];
            }
        gplus = std::move(g2);
        omegaplus = std::move(w2);
    }
    m.chart = chart;

    // alpha, omega_Sigma; d alpha = omega_Sigma is the structural identity
    m.alpha = Tensor(chart, 0, 1);
    m.alpha.at({2}) = alpha_u;
    m.alpha.at({3}) = alpha_v;
    m.omega_sigma = Tensor(chart, 0, 2, Sym::antisymmetric);
    m.omega_sigma.at({2, 3}) = Dm2;
    m.omega_sigma.at({3, 2}) = -Dm2;
    if (!(exterior_derivative(m.alpha) - m.omega_sigma).is_zero())
        throw internal_error("build_calabi: d alpha != omega_Sigma");

    m.gplus = std::move(gplus);
    m.omegaplus = std::move(omegaplus);

    // g- = z^-2 g+, omega- = z^-1 omega_Sigma - z^-2 dz ^ (dt + alpha)
    RationalFunction zm2 = (zr * zr).inverse();
    m.gminus = m.gplus.scaled(zm2);
    m.gminus.set_sym(Sym::symmetric);
    m.omegaminus = Tensor(chart, 0, 2, Sym::antisymmetric);
    {
        RationalFunction zinv = zr.inverse();
        RationalFunction wmm[4][4];
        wmm[2][3] = zinv * Dm2;
        wmm[0][1] = -zm2;
        wmm[0][2] = -(zm2 * alpha_u);
        wmm[0][3] = -(zm2 * alpha_v);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                m.omegaminus.at({i, j}) = wmm[i][j];
                m.omegaminus.at({j, i}) = -wmm[i][j];
            }
    }

    m.Jplus = raise_form_to_j(m.gplus, m.omegaplus);
    m.Jminus = raise_form_to_j(m.gminus, m.omegaminus);
    if (!is_hermitian_pair(m.gplus, m.Jplus))
        throw internal_error("build_calabi: (g+, J+) not hermitian");
    if (!is_hermitian_pair(m.gminus, m.Jminus))
        throw internal_error("build_calabi: (g-, J-) not hermitian");
    if (!exterior_derivative(m.omegaplus).is_zero())
        throw internal_error("build_calabi: d omega+ != 0");
    if (!exterior_derivative(m.omegaminus).is_zero())
        throw internal_error("build_calabi: d omega- != 0");
    return m;
}

PositivitySample sample_positivity(const Tensor& g,
                                   const std::array<std::optional<std::pair<Rational, Rational>>,
                                                    kNumVars>& box,
                                   int samples, std::uint64_t seed) {
    const int n = g.dim();
    PositivitySample out;
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::array<std::optional<Rational>, kNumVars> pt{};
        for (int v = 0; v < kNumVars; ++v) {
            if (!box[static_cast<std::size_t>(v)]) continue;
            const auto& [lo, hi] = *box[static_cast<std::size_t>(v)];
            Rational t(rng.uniform(0, 1000), 1000);
            pt[static_cast<std::size_t>(v)] = lo + (hi - lo) * t;
        }
        // evaluate the matrix; a pole excludes the sample
        std::vector<Rational> m(static_cast<std::size_t>(n * n), Rational(0));
        bool pole = false;
        for (int i = 0; i < n && !pole; ++i)
            for (int j = 0; j < n && !pole; ++j) {
                try {
                    m[static_cast<std::size_t>(i * n + j)] = g.at({i, j}).evaluate(pt);
                } catch (const pole_error&) {
                    pole = true;
                }
            }
        if (pole) {
            ++out.excluded;
            continue;
        }
        // leading principal minors by fraction-free elimination on copies
        bool positive = true, boundary = false;
        for (int k = 1; k <= n && positive && !boundary; ++k) {
            std::vector<std::vector<Rational>> a(static_cast<std::size_t>(k),
                                                 std::vector<Rational>(static_cast<std::size_t>(k)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        m[static_cast<std::size_t>(i * n + j)];
            // gaussian determinant
            Rational det(1);
            for (int col = 0; col < k; ++col) {
                int pivot = -1;
                for (int r = col; r < k; ++r)
                    if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                        pivot = r;
                        break;
                    }
                if (pivot < 0) {
                    det = Rational(0);
                    break;
                }
                if (pivot != col) {
                    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
                    det = -det;
                }
                det *= a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                for (int r = col + 1; r < k; ++r) {
                    Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
                                 a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
                    for (int c = col; c < k; ++c)
                        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
                }
            }
            if (det.is_zero())
                boundary = true;
            else if (det.sign() < 0)
                positive = false;
        }
        if (boundary)
            ++out.excluded;
        else if (positive)
            ++out.positive;
        else
            ++out.indefinite;
    }
    return out;
}

AmbitoricSpec build_pd(const Rational& h, const Rational& kappa, const Rational& sigma,
                       const Rational& delta, const Rational& gamma, const Rational& eps,
                       const Rational& lambda) {
    Rational e2h = eps * eps * h;
    std::vector<Rational> A = {lambda - e2h, eps * (sigma - delta), gamma, sigma + delta,
                               h + kappa};
    std::vector<Rational> B = {-(lambda + e2h), eps * (sigma + delta), -gamma, sigma - delta,
                               h - kappa};
    AmbitoricSpec s;
    s.type = FormType::hyperbolic;
    s.q = AmbitoricSpec::canonical_q(FormType::hyperbolic);
    s.A = BinaryForm::from_descending(4, A);
    s.B = BinaryForm::from_descending(4, B);
    s.p = QuadraticForm{eps, Rational(0), Rational(1)}; // p(z) = 1 + eps z^2
    return s;
}

} // namespace ambitoric
