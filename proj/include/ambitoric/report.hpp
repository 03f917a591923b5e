#ifndef AMBITORIC_REPORT_HPP
#define AMBITORIC_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ambitoric/classifier.hpp"

namespace ambitoric {

/// One report section: verdict (when the check is applicable) plus an exact
/// residual digest ("0" or a sample monomial / named condition) and timing.
struct ReportSection {
    std::string name;
    bool applicable = true;
    bool verdict = false;
    std::string residual; // "0" for clean passes
    long long ms = 0;
};

struct Report {
    std::string spec;
    std::vector<ReportSection> sections;

    bool all_hold() const;
    const ReportSection* find(const std::string& name) const;
};

enum class Expectation { none, extremal, bachflat, csc, einstein };
std::optional<Expectation> expectation_by_name(std::string_view s);

/// Full oracle-backed verification run: build + Kahler suite + every
/// classifier criterion applicable to the spec.
Report run_check(const AmbitoricSpec& spec);

/// Coefficient-level classification only (no curvature oracles).
Report run_classify(const AmbitoricSpec& spec);

/// Did the expectation hold in this report?
bool expectation_holds(const Report& report, Expectation e);

std::string emit_text(const Report& report);
std::string emit_json(const Report& report);

// ---- randomized instance generation (deterministic in the seed) -----------

AmbitoricSpec random_spec(FormType type, Rng& rng);
AmbitoricSpec random_extremal_spec(FormType type, Rng& rng);
AmbitoricSpec random_extremal_violating_spec(FormType type, Rng& rng);
AmbitoricSpec random_bachflat_spec(FormType type, Rng& rng);
AmbitoricSpec random_bachflat_violating_spec(FormType type, Rng& rng);
/// CSC generators for the standard p choices per type; p must match.
AmbitoricSpec random_csc_spec(FormType type, const QuadraticForm& p, Rng& rng);
AmbitoricSpec random_csc_violating_spec(FormType type, const QuadraticForm& p, Rng& rng);

/// The standard p choices per type (parabolic z; hyperbolic
/// 1+eps z^2 for eps in {0,1,-1}; elliptic 1-z^2 and z).
std::vector<QuadraticForm> listed_csc_p(FormType type);

struct TableExperiment {
    int trials = 0;
    int satisfying_pass = 0;
    int violating_pass = 0;
    bool ok = true;
    std::string witness; // serialized failing spec, if any
};

/// Extremality biconditional on `trials` satisfying + `trials` violating
/// instances: table conditions <=> Killing residual of J grad s vanishes.
/// Deterministic in the seed.  On failure the witness spec is returned and
/// (when witness_path nonempty) written to that file.
TableExperiment table_experiment(FormType type, int trials, std::uint64_t seed,
                                 const std::string& witness_path = "");

} // namespace ambitoric

#endif
