#include "ambitoric/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ambitoric/specfile.hpp"

namespace ambitoric {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string digest(const RationalFunction& r) {
    if (r.is_zero()) return "0";
    return "nonzero, leading " + Polynomial::monomial(r.num().leading().first, r.num().leading().second).str();
}

std::string digest(const Tensor& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!t.flat(i).is_zero()) return digest(t.flat(i));
    return "0";
}

std::string spec_summary(const AmbitoricSpec& spec) {
    std::ostringstream os;
    os << "type=" << form_type_name(spec.type);
    if (spec.type == FormType::general) os << " q=" << spec.q.str();
    auto dump = [&](const char* k, const BinaryForm& f) {
        os << " " << k << "=[";
        bool first = true;
        for (const auto& c : f.descending_coefficients()) {
            if (!first) os << " ";
            first = false;
            os << c.str();
        }
        os << "]";
    };
    dump("A", spec.A);
    dump("B", spec.B);
    if (spec.p) os << " p=" << spec.p->str();
    return os.str();
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ", ";
        out += p;
    }
    return out;
}

} // namespace

bool Report::all_hold() const {
    for (const auto& s : sections)
        if (!s.verdict) return false;
    return true;
}

const ReportSection* Report::find(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::optional<Expectation> expectation_by_name(std::string_view s) {
    if (s == "extremal") return Expectation::extremal;
    if (s == "bachflat") return Expectation::bachflat;
    if (s == "csc") return Expectation::csc;
    if (s == "einstein") return Expectation::einstein;
    return std::nullopt;
}

Report run_check(const AmbitoricSpec& spec) {
    Report rep;
    rep.spec = spec_summary(spec);
    auto push = [&](const std::string& name, bool verdict, std::string residual, Clock::time_point t0) {
        rep.sections.push_back({name, true, verdict, std::move(residual), ms_since(t0)});
    };

    auto t0 = Clock::now();
    AmbitoricModel model = build(spec);
    push("build", true, "0", t0);

    t0 = Clock::now();
    KaehlerVerification kv = verify_kaehler(model);
    push("kaehler", kv.ok, kv.ok ? "0" : kv.detail, t0);

    t0 = Clock::now();
    ExtremalResult ex = extremal_check(spec);
    ExtremalOracle oracle = extremal_oracle(model);
    if (oracle.extremal_plus != oracle.extremal_minus)
        throw internal_error("run_check: g+ and g- disagree on extremality");
    if (ex.verdict != oracle.extremal_plus)
        throw internal_error("run_check: extremality conditions disagree with the Killing oracle");
    push("extremal", ex.verdict, ex.verdict ? digest(oracle.residual_plus) : join(ex.failed), t0);

    bool is_bach_flat = false;
    if (ex.verdict) {
        t0 = Clock::now();
        bool cond = bach_flat_check(spec);
        Tensor B = bach(model.gplus);
        if (cond != B.is_zero())
            throw internal_error("run_check: Bach-flat condition disagrees with the Bach tensor");
        is_bach_flat = cond;
        push("bach", cond, digest(B), t0);
    }

    if (is_bach_flat) {
        t0 = Clock::now();
        EinsteinResult er = einstein_conformal(model);
        std::string what = er.conformally_flat
                               ? std::string("conformally flat (W = 0)")
                               : (std::string("via g") + er.side + ", residual " +
                                  digest(er.ric0_residual));
        push("einstein", er.verdict, what, t0);
    }

    if (spec.p) {
        t0 = Clock::now();
        CscEmResult cr = csc_em_check(model, *spec.p);
        std::string what;
        if (cr.verdict) {
            what = "constant scalar";
            if (cr.c) what += ", c = " + cr.c->str();
            if (!cr.em_residual_zero) what += ", EM residual nonzero";
            if (cr.einstein) what += ", Einstein (rho ~ q)";
        } else {
            RationalFunction ds = sg_closed(spec, *spec.p).derivative(VX);
            if (ds.is_zero()) ds = sg_closed(spec, *spec.p).derivative(VY);
            what = "s^g nonconstant: d(s^g) " + digest(ds);
        }
        push("csc_em", cr.verdict && cr.em_residual_zero, what, t0);
    }

    {
        t0 = Clock::now();
        KillingFGResult kr = killing_tensor_from_FG(model, Polynomial(), Polynomial(), true);
        bool ok = kr.residual.is_zero();
        std::string what = ok ? "barycentric g0(J+J-.,.) Killing" : digest(kr.residual);
        if (spec.p) {
            bool ex2 = diagonal_ricci_killing_existence(spec, *spec.p);
            what += ex2 ? "; Q(p) = 0: Killing tensor exists for (q/p)^2 g+"
                        : "; Q(p) != 0: no Killing tensor for (q/p)^2 g+";
        }
        push("killing", ok, what, t0);
    }

    return rep;
}

Report run_classify(const AmbitoricSpec& spec) {
    Report rep;
    rep.spec = spec_summary(spec);
    auto push = [&](const std::string& name, bool verdict, std::string residual,
                    Clock::time_point t0) {
        rep.sections.push_back({name, true, verdict, std::move(residual), ms_since(t0)});
    };

    auto t0 = Clock::now();
    ExtremalResult ex = extremal_check(spec);
    std::string detail;
    if (ex.verdict) {
        detail = "pi = " + ex.pi->str();
    } else {
        detail = join(ex.failed);
    }
    push("extremal", ex.verdict, detail, t0);

    t0 = Clock::now();
    ScalarClosed sc = scalar_curvature_closed(spec);
    push("scalar_closed", true, "s+ = " + sc.splus.str() + "; s- = " + sc.sminus.str(), t0);

    if (ex.verdict) {
        t0 = Clock::now();
        bool bf = bach_flat_check(spec);
        push("bach", bf, bf ? "pi and {q,(q,P)^(2)} dependent" : "independent", t0);
    }

    if (spec.p) {
        t0 = Clock::now();
        RationalFunction sg = sg_closed(spec, *spec.p);
        bool csc = sg.is_constant();
        push("csc_em", csc, csc ? "s^g = " + sg.str() : "s^g nonconstant", t0);

        t0 = Clock::now();
        bool exist = diagonal_ricci_killing_existence(spec, *spec.p);
        push("killing_existence", exist,
             "Q(p) = " + discriminant(*spec.p).str(), t0);
    }
    return rep;
}

bool expectation_holds(const Report& report, Expectation e) {
    const char* name = nullptr;
    switch (e) {
    case Expectation::none: return report.all_hold();
    case Expectation::extremal: name = "extremal"; break;
    case Expectation::bachflat: name = "bach"; break;
    case Expectation::csc: name = "csc_em"; break;
    case Expectation::einstein: name = "einstein"; break;
    }
    const ReportSection* s = report.find(name);
    return s && s->verdict;
}

std::string emit_text(const Report& report) {
    std::ostringstream os;
    os << "spec: " << report.spec << "\n";
    for (const auto& s : report.sections) {
        os << "  " << s.name;
        for (std::size_t i = s.name.size(); i < 18; ++i) os << ' ';
        os << (s.verdict ? "ok  " : "FAIL") << "  " << s.residual << "  [" << s.ms << " ms]\n";
    }
    return os.str();
}

std::string emit_json(const Report& report) {
    auto sections = nlohmann::ordered_json::array();
    auto verdicts = nlohmann::ordered_json::array();
    auto digests = nlohmann::ordered_json::array();
    auto timings = nlohmann::ordered_json::array();
    for (const auto& s : report.sections) {
        sections.push_back(s.name);
        verdicts.push_back(s.verdict);
        digests.push_back(s.residual);
        timings.push_back(s.ms);
    }
    nlohmann::ordered_json j;
    j["spec"] = report.spec;
    j["sections"] = std::move(sections);
    j["verdicts"] = std::move(verdicts);
    j["residual_digests"] = std::move(digests);
    j["timings_ms"] = std::move(timings);
    return j.dump(2) + "\n";
}

// ---- randomized generation -------------------------------------------------

namespace {

std::vector<Rational> random_coeffs(Rng& rng, int count) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(rng.coefficient());
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

AmbitoricSpec from_coeffs(FormType type, const std::vector<Rational>& a,
                          const std::vector<Rational>& b,
                          std::optional<QuadraticForm> p = std::nullopt) {
    return AmbitoricSpec::make(type, BinaryForm::from_descending(4, a),
                               BinaryForm::from_descending(4, b), std::move(p));
}

} // namespace

AmbitoricSpec random_spec(FormType type, Rng& rng) {
    for (;;) {
        auto a = random_coeffs(rng, 5), b = random_coeffs(rng, 5);
        if (all_zero(a) || all_zero(b)) continue;
        return from_coeffs(type, a, b);
    }
}

AmbitoricSpec random_extremal_spec(FormType type, Rng& rng) {
    for (;;) {
        auto a = random_coeffs(rng, 5);
        std::vector<Rational> b(5, Rational(0));
        switch (type) {
        case FormType::parabolic:
            b[0] = -a[0], b[1] = -a[1], b[2] = -a[2];
            b[3] = rng.coefficient(), b[4] = rng.coefficient();
            break;
        case FormType::hyperbolic:
            b[0] = -a[0], b[2] = -a[2], b[4] = -a[4];
            b[1] = rng.coefficient(), b[3] = rng.coefficient();
            break;
        case FormType::elliptic:
            b[2] = -a[2];
            b[0] = rng.coefficient();
            b[1] = rng.coefficient();
            b[4] = -(a[0] + b[0] + a[4]);
            b[3] = a[1] + b[1] - a[3];
            break;
        case FormType::general: throw malformed_error("random generation needs a named type");
        }
        if (all_zero(a) || all_zero(b)) continue;
        AmbitoricSpec s = from_coeffs(type, a, b);
        if (!extremal_check(s).verdict) throw internal_error("random_extremal_spec: not extremal");
        return s;
    }
}

AmbitoricSpec random_extremal_violating_spec(FormType type, Rng& rng) {
    for (;;) {
        AmbitoricSpec s = random_extremal_spec(type, rng);
        auto b = s.B.descending_coefficients();
        // bump one coefficient participating in exactly one condition
        switch (type) {
        case FormType::parabolic: b[static_cast<std::size_t>(rng.uniform(0, 2))] += Rational(1); break;
        case FormType::hyperbolic: {
            int pick[3] = {0, 2, 4};
            b[static_cast<std::size_t>(pick[rng.uniform(0, 2)])] += Rational(1);
            break;
        }
        case FormType::elliptic: {
            int pick[3] = {0, 2, 3};
            b[static_cast<std::size_t>(pick[rng.uniform(0, 2)])] += Rational(1);
            break;
        }
        case FormType::general: throw malformed_error("random generation needs a named type");
        }
        if (all_zero(b)) continue;
        AmbitoricSpec out = from_coeffs(type, s.A.descending_coefficients(), b);
        if (extremal_check(out).verdict) throw internal_error("perturbation failed to violate");
        return out;
    }
}

AmbitoricSpec random_bachflat_spec(FormType type, Rng& rng) {
    for (;;) {
        auto a = random_coeffs(rng, 5);
        std::vector<Rational> b(5, Rational(0));
        switch (type) {
        case FormType::hyperbolic: {
            b[0] = -a[0], b[2] = -a[2], b[4] = -a[4];
            // relation reduces to a1 a3 = b1 b3
            switch (rng.uniform(0, 3)) {
            case 0: b[1] = a[1], b[3] = a[3]; break;
            case 1: b[1] = -a[1], b[3] = -a[3]; break;
            case 2: b[1] = a[3], b[3] = a[1]; break;
            default: b[1] = -a[3], b[3] = -a[1]; break;
            }
            break;
        }
        case FormType::parabolic: {
            // relation a1 (a3+b3) = 4 a0 (a4+b4) with a1 | 4 a0 s44
            long pick[6] = {1, 2, 4, -1, -2, -4};
            a[1] = Rational(pick[rng.uniform(0, 5)]);
            if (rng.uniform(0, 3) == 0) a[0] = Rational(0);
            Rational s44 = Rational(rng.uniform(-3, 3));
            Rational s34 = Rational(4) * a[0] * s44 / a[1];
            b[0] = -a[0], b[1] = -a[1], b[2] = -a[2];
            b[3] = s34 - a[3];
            b[4] = s44 - a[4];
            break;
        }
        case FormType::elliptic: {
            b[2] = -a[2];
            if (rng.uniform(0, 1) == 0) {
                // a3 = b1 and a4+b4 = 0, i.e. b0 = -a0
                b[1] = a[3];
                b[0] = -a[0];
            } else {
                // a1+b1 = 0 (hence a3+b3 = 0) and a4+b0 = 0
                b[1] = -a[1];
                b[0] = -a[4];
            }
            b[4] = -(a[0] + b[0] + a[4]);
            b[3] = a[1] + b[1] - a[3];
            break;
        }
        case FormType::general: throw malformed_error("random generation needs a named type");
        }
        if (all_zero(a) || all_zero(b)) continue;
        AmbitoricSpec s = from_coeffs(type, a, b);
        if (!extremal_check(s).verdict || !bach_flat_check(s)) continue;
        return s;
    }
}

AmbitoricSpec random_bachflat_violating_spec(FormType type, Rng& rng) {
    // perturb one coefficient of a satisfying instance by +1, staying inside
    // the extremal family so that exactly the quadratic relation breaks
    for (;;) {
        AmbitoricSpec s = random_bachflat_spec(type, rng);
        auto a = s.A.descending_coefficients();
        auto b = s.B.descending_coefficients();
        switch (type) {
        case FormType::parabolic:
            b[static_cast<std::size_t>(rng.uniform(0, 1) == 0 ? 3 : 4)] += Rational(1);
            break;
        case FormType::hyperbolic:
            b[static_cast<std::size_t>(rng.uniform(0, 1) == 0 ? 1 : 3)] += Rational(1);
            break;
        case FormType::elliptic:
            // b1 and b3 move together to preserve a1+b1 = a3+b3
            b[1] += Rational(1);
            b[3] += Rational(1);
            break;
        case FormType::general: throw malformed_error("random generation needs a named type");
        }
        if (all_zero(b)) continue;
        AmbitoricSpec out = from_coeffs(type, a, b);
        if (!extremal_check(out).verdict) continue;
        if (bach_flat_check(out)) continue; // perturbation landed back on the relation
        return out;
    }
}

std::vector<QuadraticForm> listed_csc_p(FormType type) {
    switch (type) {
    case FormType::parabolic: return {{Rational(0), Rational(1, 2), Rational(0)}}; // p(z) = z
    case FormType::hyperbolic:
        return {{Rational(0), Rational(0), Rational(1)},   // eps = 0
                {Rational(1), Rational(0), Rational(1)},   // eps = 1
                {Rational(-1), Rational(0), Rational(1)}}; // eps = -1
    case FormType::elliptic:
        return {{Rational(-1), Rational(0), Rational(1)},  // p = 1 - z^2
                {Rational(0), Rational(1, 2), Rational(0)}}; // p = z
    case FormType::general: break;
    }
    return {};
}

AmbitoricSpec random_csc_spec(FormType type, const QuadraticForm& p, Rng& rng) {
    for (;;) {
        auto a = random_coeffs(rng, 5);
        std::vector<Rational> b(5, Rational(0));
        switch (type) {
        case FormType::parabolic:
            // p = z: a0+b0 = a2+b2 = a4+b4 = 0, a1 = b1
            b[0] = -a[0], b[2] = -a[2], b[4] = -a[4], b[1] = a[1];
            b[3] = rng.coefficient();
            break;
        case FormType::hyperbolic: {
            // p = 1 + eps z^2: b1 = eps a3, a1 = eps b3, a2+b2 = 0,
            // a0+b0 = -eps^2 (a4+b4)
            Rational eps = p.q0;
            b[3] = rng.coefficient();
            a[1] = eps * b[3];
            b[1] = eps * a[3];
            b[2] = -a[2];
            b[4] = rng.coefficient();
            b[0] = -a[0] - eps * eps * (a[4] + b[4]);
            break;
        }
        case FormType::elliptic: {
            b[2] = -a[2];
            b[1] = rng.coefficient();
            if (p.q0 == Rational(-1)) {
                // p = 1 - z^2: A+B = 2 p rho with rho _|_ p forces a2+b2 = 0,
                // a1+b1+a3+b3 = 0, a0+b0 = -(a4+b4); R _|_ qp adds a0-b0 =
                // a4-b4, together a0 = -b4 and a4 = -b0 (the crossed pairing
                // is forced; the parallel one fails the exact oracle).
                b[4] = -a[0];
                b[0] = -a[4];
                b[3] = -(a[1] + b[1] + a[3]);
            } else {
                // p = z: a0+b0 = a2+b2 = a4+b4 = 0 and a1 - b1 + a3 - b3 = 0
                b[0] = -a[0];
                b[4] = -a[4];
                b[3] = a[1] - b[1] + a[3];
            }
            break;
        }
        case FormType::general: throw malformed_error("random generation needs a named type");
        }
        if (all_zero(a) || all_zero(b)) continue;
        return from_coeffs(type, a, b, p);
    }
}

AmbitoricSpec random_csc_violating_spec(FormType type, const QuadraticForm& p, Rng& rng) {
    for (;;) {
        AmbitoricSpec s = random_csc_spec(type, p, rng);
        auto b = s.B.descending_coefficients();
        b[static_cast<std::size_t>(rng.uniform(0, 4))] += Rational(1);
        if (all_zero(b)) continue;
        AmbitoricSpec out = from_coeffs(type, s.A.descending_coefficients(), b, p);
        if (sg_closed(out, p).is_constant()) continue; // accidentally still CSC
        return out;
    }
}

TableExperiment table_experiment(FormType type, int trials, std::uint64_t seed,
                                 const std::string& witness_path) {
    if (trials < 1) throw malformed_error("table_experiment: trials must be >= 1");
    TableExperiment out;
    out.trials = trials;
    Rng rng(seed);
    auto fail = [&](const AmbitoricSpec& spec) {
        out.ok = false;
        out.witness = serialize_spec(spec);
        if (!witness_path.empty()) {
            std::ofstream f(witness_path);
            f << out.witness;
        }
    };
    for (int t = 0; t < trials; ++t) {
        AmbitoricSpec sat = random_extremal_spec(type, rng);
        ExtremalOracle o1 = extremal_oracle(build(sat));
        if (!extremal_check(sat).verdict || !o1.extremal_plus || !o1.extremal_minus) {
            fail(sat);
            return out;
        }
        ++out.satisfying_pass;
        AmbitoricSpec vio = random_extremal_violating_spec(type, rng);
        ExtremalOracle o2 = extremal_oracle(build(vio));
        if (extremal_check(vio).verdict || o2.extremal_plus || o2.extremal_minus) {
            fail(vio);
            return out;
        }
        ++out.violating_pass;
    }
    return out;
}

} // namespace ambitoric
