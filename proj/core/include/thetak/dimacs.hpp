#pragma once

#include <string>

#include "thetak/graph.hpp"

namespace thetak {

/// DIMACS edge format: "p edge n m" header, one "e i j" line per edge,
/// 1-indexed vertices, "c" comment lines. Duplicate edges, loops and
/// out-of-range indices are rejected.
Graph load_dimacs(const std::string& text, std::string id = {});

/// Canonical form: header followed by edges sorted lexicographically, i < j.
std::string save_dimacs(const Graph& g);

Graph load_dimacs_file(const std::string& path);
void save_dimacs_file(const Graph& g, const std::string& path);

}  // namespace thetak
