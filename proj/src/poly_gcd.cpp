#include <algorithm>
#include <vector>

#include "ambitoric/poly.hpp"

// Multivariate GCD over Q[x,...].  Primary engine: heuristic evaluation
// gcd (large-integer substitution, integer gcd, balanced base-xi digit
// reconstruction, verified by exact trial division).  Fallback: subresultant
// pseudo-remainder sequences with per-step content extraction.

namespace ambitoric {
namespace {

using ZTerm = std::pair<Mono, mpz_class>;

// Sparse integer polynomial, descending key order, nonzero coefficients.
struct ZP {
    std::vector<ZTerm> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first == 0); }
    int degree(int var) const {
        int d = -1;
        for (const auto& [m, c] : t) d = std::max(d, mono_exp(m, var));
        return d;
    }
};

ZP z_constant(const mpz_class& c) {
    ZP p;
    if (c != 0) p.t.push_back({0, c});
    return p;
}

ZP z_add(const ZP& a, const ZP& b, bool subtract) {
    ZP out;
    out.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].first > b.t[j].first) {
            out.t.push_back(a.t[i++]);
        } else if (a.t[i].first < b.t[j].first) {
            out.t.push_back(b.t[j]);
            if (subtract) out.t.back().second = -out.t.back().second;
            ++j;
        } else {
            mpz_class c = subtract ? mpz_class(a.t[i].second - b.t[j].second)
                                   : mpz_class(a.t[i].second + b.t[j].second);
            if (c != 0) out.t.push_back({a.t[i].first, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) {
        out.t.push_back(b.t[j]);
        if (subtract) out.t.back().second = -out.t.back().second;
    }
    return out;
}

void z_check_mul_degrees(const ZP& a, const ZP& b) {
    for (int v = 0; v < kNumVars; ++v) {
        int da = a.degree(v), db = b.degree(v);
        if (da > 0 && db > 0 && da + db > 255)
            throw resource_error("gcd: intermediate degree exceeds the representation limit");
    }
}

ZP z_mul(const ZP& a, const ZP& b) {
    if (a.is_zero() || b.is_zero()) return ZP();
    z_check_mul_degrees(a, b);
    std::vector<ZTerm> prod;
    prod.reserve(a.t.size() * b.t.size());
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) prod.push_back({ma + mb, ca * cb});
    std::sort(prod.begin(), prod.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    ZP out;
    out.t.reserve(prod.size());
    for (auto& t : prod) {
        if (!out.t.empty() && out.t.back().first == t.first) {
            out.t.back().second += t.second;
            if (out.t.back().second == 0) out.t.pop_back();
        } else {
            out.t.push_back(std::move(t));
        }
    }
    return out;
}

ZP z_mul_mono(const ZP& a, Mono m) {
    ZP out(a);
    for (auto& [k, c] : out.t) k += m;
    return out;
}

// Exact division; nullopt if not divisible.
std::optional<ZP> z_try_divide(const ZP& a, const ZP& b) {
    if (b.is_zero()) return std::nullopt;
    ZP rem(a);
    std::vector<ZTerm> q;
    const auto& dl = b.t[0];
    while (!rem.is_zero()) {
        const auto& rl = rem.t[0];
        bool ok = true;
        for (int v = 0; v < kNumVars; ++v)
            if (mono_exp(dl.first, v) > mono_exp(rl.first, v)) { ok = false; break; }
        mpz_class qc, r;
        if (ok)
            mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rl.second.get_mpz_t(),
                        dl.second.get_mpz_t());
        if (!ok || r != 0) return std::nullopt;
        ZTerm t{rl.first - dl.first, qc};
        ZP tp;
        tp.t.push_back(t);
        q.push_back(std::move(t));
        rem = z_add(rem, z_mul(b, tp), true);
    }
    std::sort(q.begin(), q.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    ZP out;
    out.t = std::move(q);
    return out;
}

ZP z_divexact(const ZP& a, const ZP& b) {
    auto q = z_try_divide(a, b);
    if (!q) throw internal_error("zgcd: inexact division");
    return *q;
}

ZP z_pow(const ZP& a, unsigned e) {
    ZP r = z_constant(1);
    ZP base(a);
    while (e) {
        if (e & 1u) r = z_mul(r, base);
        e >>= 1u;
        if (e) base = z_mul(base, base);
    }
    return r;
}

std::vector<ZP> z_univariate(const ZP& a, int var) {
    int d = a.degree(var);
    std::vector<ZP> view(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (const auto& [m, c] : a.t) {
        int e = mono_exp(m, var);
        view[static_cast<std::size_t>(e)].t.push_back({m - mono_make(var, e), c});
    }
    for (auto& p : view)
        std::sort(p.t.begin(), p.t.end(),
                  [](const auto& l, const auto& r) { return l.first > r.first; });
    return view;
}

ZP zgcd(ZP a, ZP b);

ZP z_content(const ZP& a, int var) {
    auto view = z_univariate(a, var);
    ZP g;
    for (const auto& c : view) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : zgcd(g, c);
        if (g.is_constant() && !g.is_zero() && g.t[0].second == 1) break;
    }
    return g;
}

void z_normalize_sign(ZP& a) {
    if (!a.is_zero() && a.t[0].second < 0)
        for (auto& [m, c] : a.t) c = -c;
}

mpz_class z_icontent(const ZP& a) {
    mpz_class g = 0;
    for (const auto& [m, c] : a.t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZP z_divexact_int(const ZP& a, const mpz_class& d) {
    ZP out(a);
    for (auto& [m, c] : out.t) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw internal_error("zgcd: inexact integer division");
        c = q;
    }
    return out;
}

mpz_class z_max_abs_coeff(const ZP& a) {
    mpz_class m = 0;
    for (const auto& [mo, c] : a.t) {
        mpz_class ac = abs(c);
        if (ac > m) m = ac;
    }
    return m;
}

// a with var := xi (an integer), i.e. the image in one fewer variable.
ZP z_eval_var(const ZP& a, int var, const mpz_class& xi) {
    int d = a.degree(var);
    if (d <= 0) return a;
    std::vector<mpz_class> pows(static_cast<std::size_t>(d) + 1);
    pows[0] = 1;
    for (int i = 1; i <= d; ++i) pows[static_cast<std::size_t>(i)] = pows[static_cast<std::size_t>(i - 1)] * xi;
    std::vector<ZTerm> terms;
    terms.reserve(a.t.size());
    for (const auto& [m, c] : a.t) {
        int e = mono_exp(m, var);
        terms.push_back({m - mono_make(var, e), c * pows[static_cast<std::size_t>(e)]});
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& l, const auto& r) { return l.first > r.first; });
    ZP out;
    out.t.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.t.empty() && out.t.back().first == t.first) {
            out.t.back().second += t.second;
            if (out.t.back().second == 0) out.t.pop_back();
        } else {
            out.t.push_back(std::move(t));
        }
    }
    return out;
}

// Balanced base-xi reconstruction: the polynomial in `var` whose value at
// xi is g, with coefficient polynomials having coefficients in
// (-xi/2, xi/2].  Fails (nullopt) if the degree guard trips.
std::optional<ZP> z_genpoly(ZP g, const mpz_class& xi, int var) {
    ZP out;
    mpz_class half = xi / 2;
    int k = 0;
    while (!g.is_zero()) {
        if (k > 255) return std::nullopt;
        // digit = coefficientwise symmetric mod xi
        ZP digit;
        for (const auto& [m, c] : g.t) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t()); // r in [0, xi)
            if (r > half) r -= xi;
            if (r != 0) digit.t.push_back({m, r});
        }
        if (!digit.is_zero()) out = z_add(out, z_mul_mono(digit, mono_make(var, k)), false);
        g = z_divexact_int(z_add(g, digit, true), xi);
        ++k;
    }
    return out;
}

// Heuristic gcd: full gcd (including integer content), or nullopt when all
// attempts fail.  Maximality of a division-verified candidate follows from
// the evaluation point dominating every cofactor coefficient.
std::optional<ZP> z_heugcd(const ZP& a, const ZP& b, int depth) {
    if (depth > 16) return std::nullopt;
    if (a.is_constant() && b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.t.empty() ? mpz_class(0).get_mpz_t() : a.t[0].second.get_mpz_t(),
                b.t.empty() ? mpz_class(0).get_mpz_t() : b.t[0].second.get_mpz_t());
        return z_constant(g);
    }
    mpz_class ca = z_icontent(a), cb = z_icontent(b);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZP pa = z_divexact_int(a, ca), pb = z_divexact_int(b, cb);

    int var = -1, best = -1;
    for (int v = 0; v < kNumVars; ++v) {
        int d = std::max(pa.degree(v), pb.degree(v));
        if (d > 0 && d > best) { best = d; var = v; }
    }
    if (var < 0) return std::nullopt;

    mpz_class ma = z_max_abs_coeff(pa), mb = z_max_abs_coeff(pb);
    mpz_class xi = 2 * (ma < mb ? ma : mb) + 29;
    if (xi < 1024) xi = 1024 + 29;

    for (int attempt = 0; attempt < 6; ++attempt) {
        ZP ia = z_eval_var(pa, var, xi);
        ZP ib = z_eval_var(pb, var, xi);
        if (!ia.is_zero() && !ib.is_zero()) {
            auto ig = z_heugcd(ia, ib, depth + 1);
            if (ig && !ig->is_zero()) {
                auto cand = z_genpoly(*ig, xi, var);
                if (cand && !cand->is_zero()) {
                    // inputs are integer-primitive and evaluated-variable
                    // content returns through the recursion, so any integer
                    // content left in the candidate is a spurious factor of
                    // the image gcd
                    ZP g = z_divexact_int(*cand, z_icontent(*cand));
                    z_normalize_sign(g);
                    if (z_try_divide(pa, g) && z_try_divide(pb, g))
                        return z_mul(g, z_constant(c));
                }
            }
        }
        xi = xi * 69769 + 58237; // grow ~2^16 per attempt
    }
    return std::nullopt;
}

// ---- subresultant PRS fallback ---------------------------------------------

ZP z_prem(const ZP& a, const ZP& b, int var) {
    int da = a.degree(var), db = b.degree(var);
    if (da < db) return a;
    auto bview = z_univariate(b, var);
    ZP lcb = bview.back();
    ZP r = a;
    int e = da - db + 1;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        auto rview = z_univariate(r, var);
        ZP lcr = rview.back();
        r = z_add(z_mul(lcb, r), z_mul(z_mul_mono(lcr, mono_make(var, dr - db)), b), true);
        --e;
    }
    if (e > 0) r = z_mul(r, z_pow(lcb, static_cast<unsigned>(e)));
    return r;
}

// Primitive pseudo-remainder sequence: every remainder is replaced by its
// primitive part, which keeps coefficient growth minimal.
ZP z_prs_gcd(ZP p, ZP q, int var) {
    if (p.degree(var) < q.degree(var)) std::swap(p, q);
    for (;;) {
        ZP r = z_prem(p, q, var);
        if (r.is_zero()) return q;
        if (r.degree(var) == 0) return z_constant(1);
        ZP rc = z_content(r, var);
        p = q;
        q = z_divexact(r, rc);
    }
}

ZP zgcd(ZP a, ZP b) {
    if (a.is_zero()) { z_normalize_sign(b); return b; }
    if (b.is_zero()) { z_normalize_sign(a); return a; }
    if (a.is_constant() || b.is_constant()) {
        mpz_class g = z_icontent(a);
        mpz_class gb = z_icontent(b);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gb.get_mpz_t());
        return z_constant(g);
    }
    mpz_class ica = z_icontent(a), icb = z_icontent(b);
    mpz_class ic;
    mpz_gcd(ic.get_mpz_t(), ica.get_mpz_t(), icb.get_mpz_t());
    ZP pa = z_divexact_int(a, ica), pb = z_divexact_int(b, icb);

    ZP g;
    if (auto heu = z_heugcd(pa, pb, 0)) {
        g = std::move(*heu);
    } else {
        // PRS fallback on a common main variable
        int var = -1, best = 0;
        for (int v = 0; v < kNumVars; ++v) {
            int da = pa.degree(v), db = pb.degree(v);
            if (da > 0 && db > 0) {
                int m = std::max(da, db);
                if (var < 0 || m < best) { var = v; best = m; }
            }
        }
        if (var < 0) {
            // no common variable: recurse through the content of one side
            for (int v = 0; v < kNumVars; ++v)
                if (pa.degree(v) > 0) { g = zgcd(z_content(pa, v), pb); goto done; }
            g = z_constant(1);
        } else {
            ZP ca = z_content(pa, var), cb2 = z_content(pb, var);
            ZP c = zgcd(ca, cb2);
            ZP gg = z_prs_gcd(z_divexact(pa, ca), z_divexact(pb, cb2), var);
            ZP gc = z_content(gg, var);
            g = z_mul(z_divexact(gg, gc), c);
        }
    }
done:
    g = z_mul(g, z_constant(ic));
    z_normalize_sign(g);
    return g;
}

// Integer-primitive image of a rational polynomial (scale dropped).
ZP z_primitive(const Polynomial& p) {
    if (p.is_zero()) return ZP();
    mpz_class l = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZP out;
    out.t.reserve(p.term_count());
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class z = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        out.t.push_back({m, std::move(z)});
    }
    for (auto& [m, c] : out.t) c /= g;
    return out;
}

Polynomial z_to_poly(const ZP& a) {
    std::vector<Polynomial::Term> terms;
    terms.reserve(a.t.size());
    for (const auto& [m, c] : a.t) terms.push_back({m, Rational(mpq_class(c))});
    return Polynomial::from_sorted_terms(std::move(terms));
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    ZP g = zgcd(z_primitive(a), z_primitive(b));
    return z_to_poly(g);
}

} // namespace ambitoric
