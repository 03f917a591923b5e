#include <doctest.h>

#include "ambitoric/classifier.hpp"
#include "ambitoric/report.hpp"
#include "testutil.hpp"

using namespace ambitoric;
using namespace ambitoric::testutil;

namespace {

BinaryForm quartic(long a0, long a1, long a2, long a3, long a4) {
    return BinaryForm::from_descending(
        4, {Rational(a0), Rational(a1), Rational(a2), Rational(a3), Rational(a4)});
}

const BinaryForm kZ = quartic(0, 0, 0, 1, 0);

Tensor euclidean4() {
    Chart chart({"x", "y", "t1", "t2"}, {VX, VY, std::nullopt, std::nullopt});
    Tensor g(chart, 0, 2, Sym::symmetric);
    for (int i = 0; i < 4; ++i) g.at({i, i}) = RationalFunction(Rational(1));
    return g;
}

AmbitoricModel hyperbolic_zz() {
    return build(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ));
}

} // namespace

TEST_CASE("euclidean chart: flat, Weyl-free, Bach-flat") {
    Tensor g = euclidean4();
    CurvatureBundle cb = curvature(g);
    CHECK(cb.christoffel.is_zero());
    CHECK(cb.riemann.is_zero());
    CHECK(cb.scalar.is_zero());
    WeylSplit ws = weyl_split(g);
    CHECK(ws.wplus.is_zero());
    CHECK(ws.wminus.is_zero());
    CHECK(ws.degenerate_plus);
    CHECK(ws.degenerate_minus);
    CHECK(bach(g).is_zero());
}

TEST_CASE("half-plane 2-chart: scalar curvature -2") {
    Chart chart({"x", "y"}, {VX, VY});
    Tensor g(chart, 0, 2, Sym::symmetric);
    RationalFunction y2inv(C(1), Y() * Y());
    g.at({0, 0}) = y2inv;
    g.at({1, 1}) = y2inv;
    CurvatureBundle cb = curvature(g);
    CHECK(cb.scalar == RationalFunction(Rational(-2)));
}

TEST_CASE("4d conformally flat metric has vanishing Weyl tensor") {
    Chart chart({"x", "y", "t1", "t2"}, {VX, VY, std::nullopt, std::nullopt});
    Tensor g(chart, 0, 2, Sym::symmetric);
    RationalFunction x2inv(C(1), X() * X());
    for (int i = 0; i < 4; ++i) g.at({i, i}) = x2inv;
    CurvatureBundle cb = curvature(g);
    Tensor W = weyl_tensor(g, cb);
    CHECK(W.is_zero());
    // H^4: Einstein, scalar -12
    Tensor r0 = ricci0(g, cb);
    CHECK(r0.is_zero());
    CHECK(cb.scalar == RationalFunction(Rational(-12)));
    CHECK(bach(g).is_zero());
}

TEST_CASE("curvature identities on an ambitoric instance") {
    AmbitoricModel m = hyperbolic_zz();
    const Tensor& g = m.gplus;
    CurvatureBundle cb = curvature(g);

    CHECK(cb.ricci.symmetry_ok());

    // first Bianchi: Riem(l, k, i, j) + Riem(l, i, j, k) + Riem(l, j, k, i) = 0
    bool bianchi1 = true;
    for (int l = 0; l < 4; ++l)
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    RationalFunction s = cb.riemann.at({l, k, i, j}) +
                                         cb.riemann.at({l, i, j, k}) +
                                         cb.riemann.at({l, j, k, i});
                    if (!s.is_zero()) bianchi1 = false;
                }
    CHECK(bianchi1);

    // pair symmetry of the lowered tensor
    bool pair_sym = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    if (cb.riemann_low.at({i, j, k, l}) != cb.riemann_low.at({k, l, i, j}))
                        pair_sym = false;
    CHECK(pair_sym);

    // contracted second Bianchi: div(Ric - s g / 2) = 0
    Tensor e = cb.ricci;
    RationalFunction half(Rational(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e.at({i, j}) = e.at({i, j}) - half * cb.scalar * g.at({i, j});
    CHECK(divergence_sym2(g, cb.christoffel, e).is_zero());

    // Weyl totally tracefree
    Tensor W = weyl_tensor(g, cb);
    Tensor ginv = metric_inverse(g);
    bool tracefree = true;
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            RationalFunction tr;
            for (int i = 0; i < 4; ++i)
                for (int l = 0; l < 4; ++l) {
                    if (ginv.at({i, l}).is_zero()) continue;
                    tr = tr + ginv.at({i, l}) * W.at({i, j, k, l});
                }
            if (!tr.is_zero()) tracefree = false;
        }
    CHECK(tracefree);

    // star^2 = id; omega+ selfdual, omega- antiselfdual
    Tensor sw = hodge_star2(g, m.omegaplus);
    CHECK((sw - m.omegaplus).is_zero());
    Tensor sm = hodge_star2(g, m.omegaminus);
    CHECK((sm + m.omegaminus).is_zero());
    Tensor dxdy(m.chart, 0, 2, Sym::antisymmetric);
    dxdy.at({0, 1}) = RationalFunction(Rational(1));
    dxdy.at({1, 0}) = RationalFunction(Rational(-1));
    CHECK((hodge_star2(g, hodge_star2(g, dxdy)) - dxdy).is_zero());

    // W = W+ + W-
    WeylSplit ws = weyl_split(g);
    CHECK((W - ws.wplus - ws.wminus).is_zero());
}

TEST_CASE("hyperbolic A=B=z: s+ = 0, s- = -12/(x-y), W+ = 0, W- != 0") {
    AmbitoricModel m = hyperbolic_zz();
    CurvatureBundle cbp = curvature(m.gplus);
    CHECK(cbp.scalar.is_zero());
    CurvatureBundle cbm = curvature(m.gminus);
    CHECK_MESSAGE(cbm.scalar == RationalFunction(C(-12), X() - Y()),
                  "oracle s- = ", cbm.scalar.str());
    WeylSplit ws = weyl_split(m.gplus);
    CHECK(ws.wplus.is_zero());
    CHECK(!ws.wminus.is_zero());
    CHECK(ws.degenerate_plus);
    CHECK(ws.degenerate_minus);
}

TEST_CASE("any ambitoric g+ has degenerate W+") {
    Rng rng(3);
    for (FormType t : {FormType::parabolic, FormType::hyperbolic, FormType::elliptic}) {
        AmbitoricModel m = build(random_spec(t, rng));
        WeylSplit ws = weyl_split(m.gplus);
        CHECK(ws.degenerate_plus);
    }
}

TEST_CASE("bach: vanishing for W- = 0, nonvanishing otherwise, conformal covariance") {
    // extremal with a1 = -b1, a3 = -b3: s- = 0 so W- = 0 and Bach = 0
    AmbitoricModel flat =
        build(AmbitoricSpec::make(FormType::hyperbolic, quartic(0, 1, 0, 1, 0),
                                  quartic(0, -1, 0, -1, 0)));
    CHECK(weyl_split(flat.gplus).wminus.is_zero());
    CHECK(bach(flat.gplus).is_zero());

    // extremal but not Bach-flat: parabolic A = z^3 + z, B = -z^3
    AmbitoricModel nb = build(
        AmbitoricSpec::make(FormType::parabolic, quartic(0, 1, 0, 1, 0), quartic(0, -1, 0, 0, 0)));
    Tensor B = bach(nb.gplus);
    CHECK(!B.is_zero());

    // conformal covariance: bach(f^-2 g) = f^2 bach(g) with f = x - y
    RationalFunction f(X() - Y());
    Tensor g2 = nb.gplus.scaled((f * f).inverse());
    g2.set_sym(Sym::symmetric);
    Tensor B2 = bach(g2);
    CHECK((B2 - B.scaled(f * f)).is_zero());
}

TEST_CASE("kaehler bach identity pins every sign convention") {
    // For Kahler (g,J): B = ((2 (Dds)^inv + s Ric)_0 - (Dds)^anti)/6.
    AmbitoricModel m = build(
        AmbitoricSpec::make(FormType::hyperbolic, quartic(0, 1, 0, 1, 0), quartic(0, 2, 0, 5, 0)));
    const Tensor& g = m.gplus;
    const Tensor& J = m.Jplus;
    CurvatureBundle cb = curvature(g);
    REQUIRE(!cb.scalar.is_zero());
    Tensor ds(m.chart, 0, 1);
    for (int i = 0; i < 4; ++i) ds.at({i}) = g.coord_derivative(cb.scalar, i);
    Tensor H = covariant_derivative(cb.christoffel, ds);
    Tensor Hinv(m.chart, 0, 2, Sym::symmetric), Hanti(m.chart, 0, 2, Sym::symmetric);
    RationalFunction half(Rational(1, 2));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            RationalFunction jj;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    if (J.at({a, i}).is_zero() || J.at({b, j}).is_zero()) continue;
                    jj = jj + H.at({a, b}) * J.at({a, i}) * J.at({b, j});
                }
            Hinv.at({i, j}) = (H.at({i, j}) + jj) * half;
            Hanti.at({i, j}) = (H.at({i, j}) - jj) * half;
        }
    Tensor ginv = metric_inverse(g);
    Tensor M(m.chart, 0, 2, Sym::symmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            M.at({i, j}) = RationalFunction(Rational(2)) * Hinv.at({i, j}) +
                           cb.scalar * cb.ricci.at({i, j});
    RationalFunction trM;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (ginv.at({i, j}).is_zero()) continue;
            trM = trM + ginv.at({i, j}) * M.at({i, j});
        }
    RationalFunction quarter(Rational(1, 4)), sixth(Rational(1, 6));
    Tensor expected(m.chart, 0, 2, Sym::symmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            expected.at({i, j}) =
                (M.at({i, j}) - quarter * trM * g.at({i, j}) - Hanti.at({i, j})) * sixth;
    Tensor B = bach(g);
    CHECK((B - expected).is_zero());
}

TEST_CASE("lee form: Kahler pairs and the barycentric metric") {
    AmbitoricModel m = hyperbolic_zz();
    CHECK(lee_form(m.gplus, m.Jplus).is_zero());
    CHECK(lee_form(m.gminus, m.Jminus).is_zero());
    Tensor tp = lee_form(m.g0, m.Jplus);
    Tensor tm = lee_form(m.g0, m.Jminus);
    CHECK((tp + tm).is_zero());
    RationalFunction mhalf(Rational(-1, 2));
    for (int i = 0; i < 4; ++i) {
        RationalFunction dlogf = m.g0.coord_derivative(m.f, i) / m.f;
        CHECK(tp.at({i}) == mhalf * dlogf);
    }
    Tensor notJ(m.chart, 1, 1);
    CHECK_THROWS_AS(lee_form(m.g0, notJ), malformed_error);
}

TEST_CASE("killing residuals: coordinate fields, metric multiples, barycentric tensor") {
    AmbitoricModel m = build(
        AmbitoricSpec::make(FormType::elliptic, quartic(1, 0, 2, 1, 0), quartic(0, 1, -2, 0, 3)));
    Tensor K(m.chart, 1, 0);
    K.at({2}) = RationalFunction(Rational(1));
    CHECK(killing_vector_residual(m.gplus, K).is_zero());
    K.at({3}) = RationalFunction(Rational(-7));
    CHECK(killing_vector_residual(m.gminus, K).is_zero());

    Tensor S = m.gplus.scaled(RationalFunction(Rational(3)));
    CHECK(killing_tensor_residual(m.gplus, S).is_zero());

    KillingFGResult kr = killing_tensor_from_FG(m, Polynomial(), Polynomial(), true);
    CHECK(kr.residual.is_zero());
}

TEST_CASE("nijenhuis: constant J and the built J+- are integrable") {
    Chart chart({"x", "y", "t1", "t2"}, {VX, VY, std::nullopt, std::nullopt});
    Tensor J(chart, 1, 1);
    J.at({1, 0}) = RationalFunction(Rational(1));
    J.at({0, 1}) = RationalFunction(Rational(-1));
    J.at({3, 2}) = RationalFunction(Rational(1));
    J.at({2, 3}) = RationalFunction(Rational(-1));
    CHECK(nijenhuis(J).is_zero());

    Rng rng(19);
    AmbitoricModel m = build(random_spec(FormType::elliptic, rng));
    CHECK(nijenhuis(m.Jplus).is_zero());
    CHECK(nijenhuis(m.Jminus).is_zero());
}

TEST_CASE("hamiltonian 2-form residual") {
    AmbitoricModel m = hyperbolic_zz();
    Tensor phi = m.omegaplus.scaled(RationalFunction(Rational(1, 2)));
    CHECK(hamiltonian_form_residual(m.gplus, m.Jplus, phi).is_zero());

    // from a J-invariant Killing tensor S: phi = psi - (tr_omega psi) omega
    // (parabolic: g+ = (x-y) g0, so the F=x, G=y tensor is Killing for g+)
    AmbitoricModel par = build(
        AmbitoricSpec::make(FormType::parabolic, quartic(0, 0, 1, 0, 1), quartic(0, 0, -1, 2, 0)));
    KillingFGResult kr = killing_tensor_from_FG(par, X(), Y());
    REQUIRE(kr.residual.is_zero());
    REQUIRE((kr.g - par.gplus).is_zero());
    const Tensor& S = kr.S;
    const Tensor& J = par.Jplus;
    const Tensor& g = par.gplus;
    Tensor psi(par.chart, 0, 2, Sym::antisymmetric);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            RationalFunction s;
            for (int a = 0; a < 4; ++a) {
                if (J.at({a, i}).is_zero() || S.at({a, j}).is_zero()) continue;
                s = s + J.at({a, i}) * S.at({a, j});
            }
            psi.at({i, j}) = s;
        }
    REQUIRE(psi.symmetry_ok());
    Tensor omega = kaehler_form(g, J);
    Tensor ginv = metric_inverse(g);
    RationalFunction tr;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (psi.at({i, j}).is_zero()) continue;
            RationalFunction wij;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    if (ginv.at({i, a}).is_zero() || ginv.at({j, b}).is_zero() ||
                        omega.at({a, b}).is_zero())
                        continue;
                    wij = wij + ginv.at({i, a}) * ginv.at({j, b}) * omega.at({a, b});
                }
            tr = tr + psi.at({i, j}) * wij;
        }
    tr = tr * RationalFunction(Rational(1, 2));
    Tensor phi2 = psi - omega.scaled(tr);
    CHECK(hamiltonian_form_residual(g, J, phi2).is_zero());

    // generic J-invariant phi is not hamiltonian
    Tensor phi3 = m.omegaplus.scaled(RationalFunction(X()));
    CHECK(!hamiltonian_form_residual(m.gplus, m.Jplus, phi3).is_zero());

    // non-J-invariant phi is rejected
    Tensor bad(m.chart, 0, 2, Sym::antisymmetric);
    bad.at({0, 1}) = RationalFunction(Rational(1));
    bad.at({1, 0}) = RationalFunction(Rational(-1));
    bad.at({0, 2}) = RationalFunction(Rational(1));
    bad.at({2, 0}) = RationalFunction(Rational(-1));
    CHECK_THROWS_AS(hamiltonian_form_residual(m.gplus, m.Jplus, bad), malformed_error);
}

TEST_CASE("dimension and degeneracy errors") {
    Chart chart2({"x", "y"}, {VX, VY});
    Tensor g2(chart2, 0, 2, Sym::symmetric);
    g2.at({0, 0}) = RationalFunction(Rational(1));
    g2.at({1, 1}) = RationalFunction(Rational(1));
    CHECK_THROWS_AS(weyl_split(g2), malformed_error);
    CHECK_THROWS_AS(bach(g2), malformed_error);

    Tensor sing(chart2, 0, 2, Sym::symmetric);
    sing.at({0, 0}) = RationalFunction(Rational(1));
    CHECK_THROWS_AS(curvature(sing), degenerate_error);
}
