#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "ambitoric/report.hpp"
#include "ambitoric/specfile.hpp"

using namespace ambitoric;

namespace {

int run(int argc, char** argv) {
    CLI::App app{
        "ambitoric: exact construction and curvature verification of regular\n"
        "ambitoric Kahler metric families.\n\n"
        "Spec files are line oriented: 'type:', 'A:', 'B:', optional 'p:' and\n"
        "(general type only) 'q:'.  A and B take five exact rationals in\n"
        "DESCENDING powers (the z^4 coefficient first: A(z) = a0 z^4 + a1 z^3 +\n"
        "a2 z^2 + a3 z + a4), matching the normal-form coefficient conditions\n"
        "this tool verifies.  Quadratics q, p use the half convention\n"
        "p(z) = p0 z^2 + 2 p1 z + p2.  AMBITORIC_DEGREE_CAP overrides the\n"
        "intermediate-degree resource cap (default 200).\n"};
    app.require_subcommand(1);

    std::string file, expect_name, tensor_name, metric_name = "plus", type_name, params, vcoeffs,
                                                kval = "0", sample_box;
    bool as_json = false;
    int trials = 0;
    int sample_count = 50;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "build a spec and verify it against the tensor oracle");
    check->add_option("file", file)->required();
    check->add_option("--expect", expect_name)
        ->check(CLI::IsMember({"extremal", "bachflat", "csc", "einstein"}));
    check->add_flag("--json", as_json);
    check->add_option("--sample-box", sample_box,
                      "x0,x1,y0,y1: report an exact positivity sign chart of g0, g+, g- on the box");
    check->add_option("--sample-count", sample_count, "samples for --sample-box (default 50)");

    auto* classify = app.add_subcommand("classify", "coefficient-level classification (no oracles)");
    classify->add_option("file", file)->required();
    classify->add_flag("--json", as_json);

    auto* curv = app.add_subcommand("curvature", "print a curvature tensor of the built metric");
    curv->add_option("file", file)->required();
    curv->add_option("--tensor", tensor_name)
        ->required()
        ->check(CLI::IsMember({"ricci", "scalar", "weyl", "bach"}));
    curv->add_option("--metric", metric_name)->check(CLI::IsMember({"plus", "minus", "barycentric"}));

    auto* table = app.add_subcommand("table", "randomized extremality biconditional experiment");
    table->add_option("--type", type_name)
        ->required()
        ->check(CLI::IsMember({"parabolic", "hyperbolic", "elliptic"}));
    table->add_option("--trials", trials)->required();
    table->add_option("--seed", seed)->required();

    auto* pd = app.add_subcommand("pd", "Plebanski-Demianski family constructor");
    pd->add_option("--params", params, "h,kappa,sigma,delta,gamma,epsilon,lambda")->required();

    auto* calabi = app.add_subcommand("calabi", "Calabi-type profile classification");
    calabi->add_option("--V", vcoeffs, "v0,v1,v2,v3,v4 (descending powers)")->required();
    calabi->add_option("--k", kval, "Gauss curvature of Sigma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto split_rationals = [](const std::string& csv, std::size_t expected) {
        std::vector<Rational> out;
        std::size_t pos = 0;
        while (pos <= csv.size()) {
            std::size_t comma = csv.find(',', pos);
            std::string tok =
                csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            out.push_back(Rational::parse_or_throw(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (out.size() != expected)
            throw parse_error("expected " + std::to_string(expected) + " comma-separated values");
        return out;
    };

    if (check->parsed()) {
        AmbitoricSpec spec = parse_spec_file(file);
        Report rep = run_check(spec);
        std::cout << (as_json ? emit_json(rep) : emit_text(rep));
        if (!sample_box.empty()) {
            auto v = split_rationals(sample_box, 4);
            AmbitoricModel model = build(spec);
            std::array<std::optional<std::pair<Rational, Rational>>, kNumVars> box{};
            box[VX] = std::make_pair(v[0], v[1]);
            box[VY] = std::make_pair(v[2], v[3]);
            auto chart = [&](const char* name, const Tensor& g) {
                PositivitySample ps = sample_positivity(g, box, sample_count, 1);
                std::cout << "positivity " << name << ": " << ps.positive << " positive, "
                          << ps.indefinite << " indefinite, " << ps.excluded << " excluded\n";
            };
            chart("g0", model.g0);
            chart("g+", model.gplus);
            chart("g-", model.gminus);
        }
        Expectation e = Expectation::none;
        if (!expect_name.empty()) e = *expectation_by_name(expect_name);
        bool ok = expect_name.empty() ? rep.find("kaehler")->verdict : expectation_holds(rep, e);
        return ok ? 0 : 1;
    }
    if (classify->parsed()) {
        AmbitoricSpec spec = parse_spec_file(file);
        Report rep = run_classify(spec);
        std::cout << (as_json ? emit_json(rep) : emit_text(rep));
        return 0;
    }
    if (curv->parsed()) {
        AmbitoricSpec spec = parse_spec_file(file);
        AmbitoricModel model = build(spec);
        const Tensor& g = metric_name == "minus"
                              ? model.gminus
                              : (metric_name == "barycentric" ? model.g0 : model.gplus);
        if (tensor_name == "ricci") {
            std::cout << curvature(g).ricci.str();
        } else if (tensor_name == "scalar") {
            std::cout << curvature(g).scalar.str() << "\n";
        } else if (tensor_name == "weyl") {
            CurvatureBundle cb = curvature(g);
            std::cout << weyl_tensor(g, cb).str();
        } else {
            std::cout << bach(g).str();
        }
        return 0;
    }
    if (table->parsed()) {
        if (trials < 1) {
            std::cerr << "table: --trials must be >= 1\n";
            return 2;
        }
        FormType t = *form_type_by_name(type_name);
        TableExperiment ex = table_experiment(t, trials, seed, "table_witness.spec");
        std::cout << "type " << type_name << ": " << 2 * trials << " instances, "
                  << ex.satisfying_pass << " satisfying + " << ex.violating_pass
                  << " violating passed\n";
        if (!ex.ok) {
            std::cout << "biconditional FAILED; witness written to table_witness.spec:\n"
                      << ex.witness;
            return 1;
        }
        return 0;
    }
    if (pd->parsed()) {
        auto v = split_rationals(params, 7);
        AmbitoricSpec spec = build_pd(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
        std::cout << serialize_spec(spec);
        if (spec.A.is_zero() && spec.B.is_zero()) {
            std::cerr << "pd: all parameters zero give A = B = 0 (rejected by build)\n";
            return 3;
        }
        RationalFunction sg = sg_closed(spec, *spec.p);
        bool csc = sg.is_constant();
        std::cout << "# s^g = " << sg.str() << (csc ? "  (CSC holds)" : "  (CSC FAILS)") << "\n";
        return csc ? 0 : 1;
    }
    if (calabi->parsed()) {
        auto v = split_rationals(vcoeffs, 5);
        Rational k = Rational::parse_or_throw(kval);
        BinaryForm V = BinaryForm::from_descending(4, v);
        CalabiReport r = calabi_classify(V, k);
        build_calabi(V, k); // structural verification (d alpha = omega_Sigma, ...)
        std::cout << "extremal:        " << (r.extremal ? "yes" : "no") << "\n"
                  << "bach-flat:       " << (r.bach_flat ? "yes" : "no") << "\n"
                  << "csc:             " << (r.csc ? "yes" : "no") << "\n"
                  << "kahler-einstein: " << (r.kahler_einstein ? "yes" : "no") << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ", col " << e.col << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const malformed_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_error& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
}
