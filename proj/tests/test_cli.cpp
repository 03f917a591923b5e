#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ambitoric/report.hpp"
#include "ambitoric/specfile.hpp"
#include "testutil.hpp"

using namespace ambitoric;
using namespace ambitoric::testutil;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/ambitoric_test_") + name;
    std::ofstream f(path);
    f << text;
    return path;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(AMBITORIC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("spec file parsing: good files and located errors") {
    AmbitoricSpec s = parse_spec_text("# comment\ntype: hyperbolic\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n");
    CHECK(s.type == FormType::hyperbolic);
    CHECK(s.A.p == Z());
    CHECK(!s.p.has_value());

    AmbitoricSpec s2 = parse_spec_text(
        "type: general\nq: 1 0 0\nA: 1 0 0 0 0\nB: 0 0 1 0 1\np: 1 0 0\n");
    CHECK(s2.q == QuadraticForm{Rational(1), Rational(0), Rational(0)});
    CHECK(s2.p.has_value());

    // malformed coefficient 1//2 with location
    try {
        parse_spec_text("type: hyperbolic\nA: 1//2 0 0 1 0\nB: 0 0 0 1 0\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col > 1);
    }
    CHECK_THROWS_AS(parse_spec_text("A: 0 0 0 1 0\nB: 0 0 0 1 0\n"), parse_error); // no type
    CHECK_THROWS_AS(parse_spec_text("type: toric\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_spec_text("type: general\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n"), parse_error);
    CHECK_THROWS_AS(
        parse_spec_text("type: hyperbolic\nq: 0 1 0\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_spec_text("type: hyperbolic\nA: 0 0 0 1\nB: 0 0 0 1 0\n"), parse_error);
    // orthogonality violation is malformed input, not a parse error
    CHECK_THROWS_AS(
        parse_spec_text("type: hyperbolic\nA: 0 0 0 1 0\nB: 0 0 0 1 0\np: 0 1 0\n"),
        malformed_error);
    // A = B = 0 is degenerate input
    CHECK_THROWS_AS(parse_spec_text("type: hyperbolic\nA: 0 0 0 0 0\nB: 0 0 0 0 0\n"),
                    degenerate_error);
}

TEST_CASE("spec serialization round trip") {
    Rng rng(7);
    AmbitoricSpec s = random_csc_spec(FormType::hyperbolic, listed_csc_p(FormType::hyperbolic)[1], rng);
    AmbitoricSpec back = parse_spec_text(serialize_spec(s));
    CHECK(back.type == s.type);
    CHECK(back.A == s.A);
    CHECK(back.B == s.B);
    CHECK(back.p == s.p);
}

TEST_CASE("run_check: the hyperbolic A=B=z fixture report") {
    AmbitoricSpec s = parse_spec_text("type: hyperbolic\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n");
    Report rep = run_check(s);
    REQUIRE(rep.find("kaehler"));
    CHECK(rep.find("kaehler")->verdict);
    REQUIRE(rep.find("extremal"));
    CHECK(rep.find("extremal")->verdict);
    REQUIRE(rep.find("bach"));
    CHECK(rep.find("bach")->verdict);
    REQUIRE(rep.find("einstein"));
    CHECK(rep.find("einstein")->verdict);
    CHECK(rep.find("einstein")->residual.find("via g-") != std::string::npos);
    REQUIRE(rep.find("killing"));
    CHECK(rep.find("killing")->verdict);
    CHECK(rep.all_hold());
    CHECK(expectation_holds(rep, Expectation::extremal));
    CHECK(expectation_holds(rep, Expectation::einstein));

    // non-extremal spec: bach/einstein sections absent; --expect extremal names the residual
    AmbitoricSpec ne = parse_spec_text("type: parabolic\nA: 1 0 0 0 0\nB: 1 0 0 0 0\n");
    Report rn = run_check(ne);
    CHECK(!rn.find("bach"));
    CHECK(!rn.find("einstein"));
    CHECK(!expectation_holds(rn, Expectation::extremal));
    CHECK(rn.find("extremal")->residual.find("a0+b0 = 2") != std::string::npos);
}

TEST_CASE("emit_json: required fields, empty report, determinism") {
    Report empty;
    auto j0 = nlohmann::json::parse(emit_json(empty));
    CHECK(j0["verdicts"].is_array());
    CHECK(j0["verdicts"].empty());

    AmbitoricSpec s = parse_spec_text(
        "type: parabolic\nA: 0 1 0 1 0\nB: 0 1 0 -1 0\np: 0 1/2 0\n");
    Report r1 = run_check(s);
    Report r2 = run_check(s);
    auto j1 = nlohmann::json::parse(emit_json(r1));
    auto j2 = nlohmann::json::parse(emit_json(r2));
    CHECK(j1.contains("spec"));
    CHECK(j1.contains("verdicts"));
    CHECK(j1.contains("residual_digests"));
    CHECK(j1.contains("timings_ms"));
    j1["timings_ms"] = nullptr;
    j2["timings_ms"] = nullptr;
    CHECK(j1.dump() == j2.dump()); // byte-identical except timings
}

TEST_CASE("table_experiment: deterministic counts and the usage guard") {
    TableExperiment ex = table_experiment(FormType::elliptic, 1, 7);
    CHECK(ex.ok);
    CHECK(ex.satisfying_pass == 1);
    CHECK(ex.violating_pass == 1);
    CHECK_THROWS_AS(table_experiment(FormType::elliptic, 0, 7), malformed_error);
}

TEST_CASE("cli: exit code contract") {
    std::string good = write_temp("good.spec", "type: hyperbolic\nA: 0 0 0 1 0\nB: 0 0 0 1 0\n");
    CHECK(run_cli("check " + good) == 0);
    CHECK(run_cli("check " + good + " --expect einstein --json") == 0);

    std::string z4 = write_temp("z4.spec", "type: parabolic\nA: 1 0 0 0 0\nB: 1 0 0 0 0\n");
    CHECK(run_cli("check " + z4 + " --expect extremal") == 1);
    CHECK(run_cli("classify " + z4) == 0);

    std::string bad = write_temp("bad.spec", "type: hyperbolic\nA: 1//2 0 0 1 0\nB: 0 0 0 1 0\n");
    CHECK(run_cli("check " + bad) == 2);

    std::string degen = write_temp("degen.spec", "type: hyperbolic\nA: 0 0 0 0 0\nB: 0 0 0 1 0\n");
    CHECK(run_cli("check " + degen) == 3);

    std::string cap = write_temp("cap.spec", "type: hyperbolic\nA: 1 1 1 1 1\nB: 0 0 0 1 0\n");
    int rc = std::system((std::string("AMBITORIC_DEGREE_CAP=3 ") + AMBITORIC_CLI_PATH +
                          " check " + cap + " >/dev/null 2>&1")
                             .c_str());
    CHECK(WEXITSTATUS(rc) == 4);

    CHECK(run_cli("table --type elliptic --trials 0 --seed 1") == 2);
    CHECK(run_cli("table --type elliptic --trials 1 --seed 7") == 0);
    CHECK(run_cli("pd --params 1,0,0,0,0,0,1") == 0);
    CHECK(run_cli("calabi --V 0,0,1,1,0 --k 1") == 0);
    CHECK(run_cli("curvature " + good + " --tensor scalar --metric minus") == 0);
    CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("classify report on a CSC spec") {
    AmbitoricSpec s = parse_spec_text(
        "type: parabolic\nA: 0 1 0 1 0\nB: 0 1 0 -1 0\np: 0 1/2 0\n");
    Report rep = run_classify(s);
    REQUIRE(rep.find("csc_em"));
    CHECK(rep.find("csc_em")->verdict);
    REQUIRE(rep.find("killing_existence"));
    CHECK(!rep.find("killing_existence")->verdict); // Q(p) = 1/4 != 0
    REQUIRE(rep.find("scalar_closed"));
}
