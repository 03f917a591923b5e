#include <doctest.h>

#include "ambitoric/builder.hpp"
#include "ambitoric/report.hpp"
#include "testutil.hpp"

using namespace ambitoric;
using namespace ambitoric::testutil;

namespace {

BinaryForm quartic(long a0, long a1, long a2, long a3, long a4) {
    return BinaryForm::from_descending(
        4, {Rational(a0), Rational(a1), Rational(a2), Rational(a3), Rational(a4)});
}

const BinaryForm kZ = quartic(0, 0, 0, 1, 0); // A(z) = z

RationalFunction rf(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

} // namespace

TEST_CASE("hyperbolic normal form: g0, f, omega+-") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ));
    // g0 on dx^2 is 1/A(x)
    CHECK(m.g0.at({0, 0}) == rf(C(1), X()));
    CHECK(m.g0.at({1, 1}) == rf(C(1), Y()));
    // f = (x+y)/(x-y)
    CHECK(m.f == rf(X() + Y(), X() - Y()));
    // g0 torus block: [A(x)(dt1+y^2 dt2)^2 + B(y)(dt1+x^2 dt2)^2]/(x^2-y^2)^2
    Polynomial d = (X() * X() - Y() * Y()) * (X() * X() - Y() * Y());
    CHECK(m.g0.at({2, 2}) == rf(X() + Y(), d));
    CHECK(m.g0.at({2, 3}) == rf(X() * Y() * (X() + Y()), d));
    CHECK(m.g0.at({3, 3}) == rf(X() * Y() * (X().pow(3) + Y().pow(3)), d));
    // omega+ = [dx^(dt1 + y^2 dt2) + dy^(dt1 + x^2 dt2)]/(x+y)^2
    Polynomial xpy2 = (X() + Y()) * (X() + Y());
    CHECK(m.omegaplus.at({0, 2}) == rf(C(1), xpy2));
    CHECK(m.omegaplus.at({0, 3}) == rf(Y() * Y(), xpy2));
    CHECK(m.omegaplus.at({1, 2}) == rf(C(1), xpy2));
    CHECK(m.omegaplus.at({1, 3}) == rf(X() * X(), xpy2));
    CHECK(m.omegaplus.at({0, 1}).is_zero());
    CHECK(m.omegaplus.at({2, 3}).is_zero());
    // omega- = [dx^(dt1 + y^2 dt2) - dy^(dt1 + x^2 dt2)]/(x-y)^2
    Polynomial xmy2 = (X() - Y()) * (X() - Y());
    CHECK(m.omegaminus.at({0, 2}) == rf(C(1), xmy2));
    CHECK(m.omegaminus.at({0, 3}) == rf(Y() * Y(), xmy2));
    CHECK(m.omegaminus.at({1, 2}) == rf(C(-1), xmy2));
    CHECK(m.omegaminus.at({1, 3}) == rf(-(X() * X()), xmy2));
}

TEST_CASE("parabolic normal form: omega+ = dx^(dt1+y dt2) + dy^(dt1+x dt2)") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::parabolic, quartic(0, 0, 0, 0, 1),
                                                 quartic(0, 0, 0, 0, 1)));
    CHECK(m.omegaplus.at({0, 2}) == RationalFunction(Rational(1)));
    CHECK(m.omegaplus.at({0, 3}) == RationalFunction(Y()));
    CHECK(m.omegaplus.at({1, 2}) == RationalFunction(Rational(1)));
    CHECK(m.omegaplus.at({1, 3}) == RationalFunction(X()));
    CHECK(m.f == rf(C(1), X() - Y()));
    Polynomial xmy2 = (X() - Y()) * (X() - Y());
    CHECK(m.omegaminus.at({0, 2}) == rf(C(1), xmy2));
    CHECK(m.omegaminus.at({1, 2}) == rf(C(-1), xmy2));
}

TEST_CASE("elliptic normal form: omega+- over (1+xy)^2 and (x-y)^2") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::elliptic, quartic(0, 1, 0, 1, 0),
                                                 quartic(0, 1, 0, 1, 0)));
    Polynomial den = (C(1) + X() * Y()) * (C(1) + X() * Y());
    CHECK(m.omegaplus.at({0, 2}) == rf(Y().scaled(Rational(2)), den));
    CHECK(m.omegaplus.at({0, 3}) == rf(Y() * Y() - C(1), den));
    CHECK(m.omegaplus.at({1, 2}) == rf(X().scaled(Rational(2)), den));
    CHECK(m.omegaplus.at({1, 3}) == rf(X() * X() - C(1), den));
    Polynomial dm = (X() - Y()) * (X() - Y());
    CHECK(m.omegaminus.at({0, 2}) == rf(Y().scaled(Rational(2)), dm));
    CHECK(m.omegaminus.at({1, 2}) == rf(X().scaled(Rational(-2)), dm));
    CHECK(m.f == rf(C(1) + X() * Y(), X() - Y()));
}

TEST_CASE("build rejects degenerate and malformed inputs") {
    CHECK_THROWS_AS(build(AmbitoricSpec::make(FormType::hyperbolic, quartic(0, 0, 0, 0, 0), kZ)),
                    degenerate_error);
    // p not orthogonal to q: <q,q> = 2Q(q) = 2 for hyperbolic
    CHECK_THROWS_AS(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ,
                                        QuadraticForm{Rational(0), Rational(1), Rational(0)}),
                    malformed_error);
}

TEST_CASE("J pullback reproduces the normal-form d^c one-forms") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ));
    Tensor dx(m.chart, 0, 1), dy(m.chart, 0, 1);
    dx.at({0}) = RationalFunction(Rational(1));
    dy.at({1}) = RationalFunction(Rational(1));
    // d^c+x = d^c-x = A(x)/((x-y)q(x,y)) (y^2 dtau0 + 2y dtau1 + dtau2)
    Polynomial den = (X() - Y()) * (X() + Y());
    RationalFunction dc_x_t1 = rf(X(), den); // A(x) dt1-coefficient
    RationalFunction dc_x_t2 = rf(X() * Y() * Y(), den);
    RationalFunction dc_y_t1 = rf(Y(), den);
    RationalFunction dc_y_t2 = rf(Y() * X() * X(), den);
    Tensor jx = j_pullback(m.Jplus, dx);
    CHECK(jx.at({0}).is_zero());
    CHECK(jx.at({1}).is_zero());
    CHECK(jx.at({2}) == -dc_x_t1);
    CHECK(jx.at({3}) == -dc_x_t2);
    Tensor jxm = j_pullback(m.Jminus, dx);
    CHECK(jxm.at({2}) == -dc_x_t1); // d^c-x = d^c+x
    CHECK(jxm.at({3}) == -dc_x_t2);
    Tensor jy = j_pullback(m.Jplus, dy);
    CHECK(jy.at({2}) == -dc_y_t1);
    CHECK(jy.at({3}) == -dc_y_t2);
    Tensor jym = j_pullback(m.Jminus, dy);
    CHECK(jym.at({2}) == dc_y_t1); // d^c-y = -d^c+y
    CHECK(jym.at({3}) == dc_y_t2);
}

TEST_CASE("momentum maps: frozen normal-form values") {
    AmbitoricModel hyp = build(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ));
    // mu+_1 = -1/(x+y) for w = 1, mu-_1 = -1/(x-y) for p = 1
    QuadraticForm one{Rational(0), Rational(0), Rational(1)};
    CHECK(momentum_plus(hyp, one) == rf(C(-1), X() + Y()));
    CHECK(momentum_minus(hyp, one, Rational(0)) == rf(C(-1), X() - Y()));
    // mu-_2 = -xy/(x-y) for p = z^2
    QuadraticForm z2{Rational(1), Rational(0), Rational(0)};
    CHECK(momentum_minus(hyp, z2, Rational(0)) == rf(-(X() * Y()), X() - Y()));

    AmbitoricModel ell = build(AmbitoricSpec::make(FormType::elliptic, quartic(0, 1, 0, 1, 0),
                                                   quartic(0, 1, 0, 1, 0)));
    // mu+_1 = -(1-xy)/(1+xy) for w = 1 - z^2
    QuadraticForm w1{Rational(-1), Rational(0), Rational(1)};
    CHECK(momentum_plus(ell, w1) == rf(X() * Y() - C(1), C(1) + X() * Y()));

    AmbitoricModel par = build(AmbitoricSpec::make(FormType::parabolic, quartic(0, 0, 0, 0, 1),
                                                   quartic(0, 0, 0, 0, 1)));
    // parabolic mu+ pair = (x+y, xy)
    QuadraticForm wa{Rational(0), Rational(-1), Rational(0)}; // w = -2z
    QuadraticForm wb{Rational(-1), Rational(0), Rational(0)}; // w = -z^2
    CHECK(momentum_plus(par, wa) == RationalFunction(X() + Y()));
    CHECK(momentum_plus(par, wb) == RationalFunction(X() * Y()));
    // momentum with non-orthogonal p errors out
    CHECK_THROWS_AS(
        momentum_minus(hyp, QuadraticForm{Rational(0), Rational(1), Rational(0)}, Rational(0)),
        malformed_error);
}

TEST_CASE("symplectic potential: d chi = -omega- for every type") {
    for (FormType t : {FormType::parabolic, FormType::hyperbolic, FormType::elliptic}) {
        Rng rng(100 + static_cast<int>(t));
        AmbitoricSpec spec = random_spec(t, rng);
        AmbitoricModel m = build(spec);
        Tensor chi = symplectic_potential(m); // asserts d chi + omega- = 0 internally
        CHECK((exterior_derivative(chi) + m.omegaminus).is_zero());
    }
}

TEST_CASE("omega(K1, K2) = 0: the torus is isotropic for both forms") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::hyperbolic, kZ, quartic(1, 0, 2, 0, 1)));
    CHECK(m.omegaplus.at({2, 3}).is_zero());
    CHECK(m.omegaminus.at({2, 3}).is_zero());
}

TEST_CASE("general-type build with a canonical q reproduces the named model") {
    Rng rng(77);
    for (FormType t : {FormType::parabolic, FormType::hyperbolic, FormType::elliptic}) {
        AmbitoricSpec named = random_spec(t, rng);
        AmbitoricSpec gen;
        gen.type = FormType::general;
        gen.q = AmbitoricSpec::canonical_q(t);
        gen.A = named.A;
        gen.B = named.B;
        AmbitoricModel m1 = build(named);
        AmbitoricModel m2 = build(gen);
        CHECK((m1.g0 - m2.g0).is_zero());
        CHECK((m1.omegaplus - m2.omegaplus).is_zero());
        CHECK((m1.omegaminus - m2.omegaminus).is_zero());
        CHECK((m1.Jplus - m2.Jplus).is_zero());
        CHECK((m1.Jminus - m2.Jminus).is_zero());
    }
    // a non-canonical degenerate q (q = z^2) also builds
    AmbitoricSpec odd;
    odd.type = FormType::general;
    odd.q = QuadraticForm{Rational(1), Rational(0), Rational(0)};
    odd.A = kZ;
    odd.B = quartic(0, 0, 1, 0, 1);
    CHECK_NOTHROW(build(odd));
}

TEST_CASE("plebanski-demianski constructor: frozen instances") {
    // all parameters zero: A = B = 0, rejected downstream by build
    AmbitoricSpec zero = build_pd(Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                                  Rational(0), Rational(0));
    CHECK(zero.A.is_zero());
    CHECK(zero.B.is_zero());
    CHECK_THROWS_AS(build(zero), degenerate_error);

    // (h,kappa,sigma,delta,gamma,eps,lambda) = (1,0,0,0,0,0,1): A = 1+z^4, B = 1-z^4
    AmbitoricSpec s = build_pd(Rational(1), Rational(0), Rational(0), Rational(0), Rational(0),
                               Rational(0), Rational(1));
    CHECK(s.A.p == Z().pow(4) + C(1));
    CHECK(s.B.p == C(1) - Z().pow(4));
    CHECK(*s.p == QuadraticForm{Rational(0), Rational(0), Rational(1)});
}

TEST_CASE("plebanski-demianski CSC conditions hold identically in the 7 parameters") {
    // parameters as polynomial symbols: h=x, kappa=y, sigma=z, delta=u,
    // gamma=v, eps=a, lambda=b
    Polynomial h = Polynomial::variable(VX), kap = Polynomial::variable(VY),
               sig = Polynomial::variable(VZ), del = Polynomial::variable(VU),
               gam = Polynomial::variable(VV), eps = Polynomial::variable(VA),
               lam = Polynomial::variable(VB);
    Polynomial a[5] = {lam - eps * eps * h, eps * (sig - del), gam, sig + del, h + kap};
    Polynomial b[5] = {-(lam + eps * eps * h), eps * (sig + del), -gam, sig - del, h - kap};
    // a0+b0 = -eps^2(a4+b4); a1+b1 = eps(a3+b3); a2+b2 = 0; a1-b1 = -eps(a3-b3)
    CHECK((a[0] + b[0] + eps * eps * (a[4] + b[4])).is_zero());
    CHECK((a[1] + b[1] - eps * (a[3] + b[3])).is_zero());
    CHECK((a[2] + b[2]).is_zero());
    CHECK((a[1] - b[1] + eps * (a[3] - b[3])).is_zero());
}

TEST_CASE("positivity sampler: exact sign chart on user boxes") {
    AmbitoricModel m = build(AmbitoricSpec::make(FormType::hyperbolic, kZ, kZ));
    std::array<std::optional<std::pair<Rational, Rational>>, kNumVars> box{};
    box[VX] = std::make_pair(Rational(3), Rational(4));
    box[VY] = std::make_pair(Rational(1), Rational(2));
    PositivitySample ps = sample_positivity(m.gplus, box, 25, 9);
    CHECK(ps.positive == 25);
    CHECK(ps.indefinite == 0);
    // A(x) = x < 0 on the flipped box: never positive definite there
    box[VX] = std::make_pair(Rational(-2), Rational(-1));
    PositivitySample ns = sample_positivity(m.gplus, box, 25, 9);
    CHECK(ns.positive == 0);
    CHECK(ns.indefinite > 0);
}

TEST_CASE("calabi package: structural identities and Vbar") {
    BinaryForm V(4, Z() * Z());
    CalabiModel m = build_calabi(V, Rational(1));
    // Vbar(zbar) = zbar^4 V(1/zbar) = z^2 for V = z^2
    CHECK(m.Vbar.p == Z() * Z());
    BinaryForm V2 = quartic(1, 2, 3, 4, 5);
    CalabiModel m2 = build_calabi(V2, Rational(0));
    CHECK(m2.Vbar.p == quartic(5, 4, 3, 2, 1).p);
    // k = 0: alpha = u dv also satisfies d alpha = du ^ dv; the built alpha
    // satisfies d alpha = omega_Sigma exactly
    Tensor udv(m2.chart, 0, 1);
    udv.at({3}) = RationalFunction(Polynomial::variable(VU));
    Tensor d = exterior_derivative(udv);
    CHECK(d.at({2, 3}) == RationalFunction(Rational(1)));
    CHECK((exterior_derivative(m2.alpha) - m2.omega_sigma).is_zero());
    // g- = z^-2 g+
    RationalFunction z2{Z() * Z()};
    CHECK((m.gminus.scaled(z2) - m.gplus).is_zero());
    CHECK_THROWS_AS(build_calabi(BinaryForm(4, Polynomial()), Rational(1)), degenerate_error);
}
