#pragma once

#include <vector>

#include "thetak/graph.hpp"

namespace thetak {

/// All graphs on n vertices up to isomorphism, n <= 7. Each class is
/// represented by the numerically smallest adjacency bitmask in its
/// relabeling orbit, so the output order is deterministic.
std::vector<Graph> all_graphs(int n);

/// Connected graphs on n vertices up to isomorphism, n <= 7.
std::vector<Graph> connected_graphs(int n);

}  // namespace thetak
