#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetak/graph.hpp"
#include "thetak/oracles.hpp"
#include "thetak/theta_solver.hpp"

namespace thetak {

/// A theta value obtained from one of the family formulas, together with the
/// precondition checks that selected the regime.
struct FormulaResult {
    double value = 0.0;
    std::string formula_id;
    std::vector<std::pair<std::string, bool>> applicability;
};

/// Closed-form theta_k for the supported families. Returns nullopt whenever
/// the family spec falls outside every formula's window; callers fall back
/// to the solver. Circulant and general Johnson formulas anchor on a single
/// k=1 solve that is cached and reused for all k.
std::optional<FormulaResult> theta_k_formula(const FamilySpec& spec, int k,
                                             const SolverConfig& cfg = {});

/// Lovasz theta of an odd cycle: n cos(pi/n) / (1 + cos(pi/n)).
double odd_cycle_theta(int n);

/// Solution of one of the two symmetry-reduced programs for strongly regular
/// graphs, carrying all constraint slacks for verification.
struct SrgReducedSolution {
    enum class Program { matrix_lifting, cartesian_prime };
    Program program = Program::matrix_lifting;
    double y1 = 0.0, y2 = 0.0;              // matrix_lifting variables
    double x1 = 0.0, x2 = 0.0, z1 = 0.0, z2 = 0.0;  // cartesian_prime variables
    double objective = 0.0;
    std::vector<std::pair<std::string, double>> slacks;

    double min_slack() const;
};

/// Analytic optimum of the two-variable reduced program:
/// objective min{ k (r + n - d) / (r + 1), n } at the constraint
/// intersection point, capped by y1 <= 1.
SrgReducedSolution srg_theta3(const SrgParams& p, int k);

/// Four-variable reduced program for theta'(K_k box G); valid for
/// k < n(r+1)/(r+n-d) and equal in objective to srg_theta3. Throws outside
/// the window.
SrgReducedSolution srg_theta_prime_cart(const SrgParams& p, int k);

/// Largest window accepted by srg_theta_prime_cart: k < n(r+1)/(r+n-d).
double srg_prime_cart_window(const SrgParams& p);

/// Dense grid maximization of the two-variable reduced program over
/// [0,1]^2 at the given resolution; cross-checks the analytic optimum.
double srg_matr_grid_max(const SrgParams& p, int k, double resolution = 2e-3);

/// Exact stable-set size bound for the orthogonality graph:
/// 4 * sum_{i=0}^{n/4-1} C(n-1, i), computed in exact arbitrary precision.
struct OrthAlphaBound {
    std::string decimal;
    std::optional<std::uint64_t> value;  // set when it fits 64 bits
};
OrthAlphaBound orth_alpha_lb(int n);

/// One side of a chi_k bracket with the identifier of the winning bound.
struct Bound {
    double value = 0.0;
    std::string source;
};

struct BoundPair {
    Bound lower, upper;
};

/// Optional exact inputs for the bound aggregation.
struct ExactValues {
    std::optional<int> omega, alpha, chi;
};

/// Best lower/upper bounds on chi_k from the spectral, counting and
/// family-exact bounds; family-exact results collapse the bracket.
BoundPair chi_k_bounds(const Graph& g, int k, const ExactValues& exact = {});

struct NordhausBounds {
    double product_lower = 0.0, product_upper = 0.0;
    double sum_lower = 0.0, sum_upper = 0.0;
};

/// Bounds on chi_k(G) * chi_k(complement) and chi_k(G) + chi_k(complement).
NordhausBounds nordhaus_bounds(int n, int k);

}  // namespace thetak
