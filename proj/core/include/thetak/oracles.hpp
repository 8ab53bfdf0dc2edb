#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "thetak/graph.hpp"

namespace thetak {

/// Node budget and wall-clock cap for the exact solvers. A zero time limit
/// means "use THETAK_TIME_LIMIT_MS if set, otherwise unlimited".
struct OracleLimits {
    long long node_limit = 10'000'000;
    std::chrono::milliseconds time_limit{0};
};

/// Exact value with a validating witness. When limit_hit is set the value is
/// only a certified bound (an upper bound for chromatic-type quantities, a
/// lower bound for independence-type quantities) and must not be treated as
/// exact.
struct OracleResult {
    int value = 0;
    std::vector<int> coloring;    // proper coloring witness (chromatic oracles)
    std::vector<int> vertex_set;  // independent-set witness (alpha oracles)
    long long nodes = 0;
    bool limit_hit = false;
};

/// Exact chromatic number by saturation-degree branch and bound seeded with a
/// greedy clique lower bound and a greedy coloring upper bound.
OracleResult exact_chromatic(const Graph& g, const OracleLimits& limits = {});

/// Exact independence number by branch and bound with a greedy-coloring bound.
OracleResult exact_alpha(const Graph& g, const OracleLimits& limits = {});

/// Clique number; delegates to exact_alpha on the complement.
OracleResult exact_clique(const Graph& g, const OracleLimits& limits = {});

/// chi_k via the lexicographic product: chi_k(G) = chi(G o K_k).
OracleResult exact_chi_k(const Graph& g, int k, const OracleLimits& limits = {});

/// alpha_k via the Cartesian product: alpha_k(G) = alpha(K_k box G).
OracleResult exact_alpha_k(const Graph& g, int k, const OracleLimits& limits = {});

/// BFS two-coloring; the witness (one color per vertex) is returned when the
/// graph is bipartite.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

bool validate_coloring(const Graph& g, const std::vector<int>& coloring, int colors);
bool validate_independent_set(const Graph& g, const std::vector<int>& vertices);

}  // namespace thetak
