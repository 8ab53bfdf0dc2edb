#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetak/closed_forms.hpp"
#include "thetak/graph.hpp"
#include "thetak/methods.hpp"
#include "thetak/oracles.hpp"

namespace thetak {

/// theta_1..theta_K with the increment sequence; delta_1 = theta_1.
struct DeltaSequence {
    std::string graph_id;
    std::vector<double> values;
    std::vector<double> increments;
    std::vector<std::string> methods;

    bool nondecreasing(double tol = 1e-4) const;
    bool increments_nonincreasing(double tol = 5e-4) const;
};

DeltaSequence delta_sequence(const Graph& g, int k_max, const SolverConfig& cfg = {});

enum class CheckStatus { pass, fail, finding };

std::string status_name(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    double slack = 0.0;  // margin left before the check would flip to fail
    std::string detail;
};

struct AlphaCell {
    double value = 0.0;
    bool exact = true;  // false when the oracle hit its budget (bracket only)
};

struct ThetaCell {
    double value = 0.0;
    std::string method;
    std::string detail;
};

struct BoundRow {
    int k = 1;
    std::optional<AlphaCell> alpha_k;
    ThetaCell theta;
    std::optional<double> theta_prime;
    Bound chi_lower, chi_upper;
    std::optional<int> chi_exact;
    bool sandwich_ok = true;
};

struct BoundReport {
    std::string graph_id;
    std::string spec;  // family string when known, empty otherwise
    int order = 0;
    long long edges = 0;
    std::optional<int> psi;
    std::vector<BoundRow> rows;
    std::vector<CheckResult> checks;  // suite verdicts; findings never fail

    bool passed() const;
};

struct SuiteConfig {
    std::string name;
    std::string corpus;  // selector, e.g. "n<=6"; empty = suite default
    int k_max = 3;
    SolverConfig solver;
    OracleLimits oracle_limits;
    int workers = 0;  // 0 = hardware concurrency

    void validate() const;
};

/// Per-graph parameter table: closed forms when applicable, solver otherwise,
/// exact oracles when the instance is under the size caps.
BoundReport compute_report(const Graph& g, int k_min, int k_max,
                           const SolverConfig& cfg = {},
                           const OracleLimits& limits = {});

std::vector<std::string> suite_names();

/// Runs one named verification suite. Throws on unknown names.
BoundReport run_suite(const SuiteConfig& cfg);

/// Shared corpus pass for the sandwich and sequence-law suites: one set of
/// theta solves serves both check families.
struct SequenceLawChecks {
    std::vector<CheckResult> sandwich;
    std::vector<CheckResult> monotone;
};
SequenceLawChecks evaluate_sequence_laws(int max_vertices, int k_max,
                                         const SolverConfig& solver,
                                         const OracleLimits& limits, int workers);

std::string to_json(const BoundReport& report);
BoundReport report_from_json(const std::string& text);
std::string to_csv(const BoundReport& report);

/// Numeric formatting used by all text output: 9 significant digits.
std::string format_value(double v);

/// Index-sharded worker pool; results land in caller-owned slots so output
/// order stays deterministic.
void parallel_for(int jobs, int workers, const std::function<void(int)>& fn);

}  // namespace thetak
