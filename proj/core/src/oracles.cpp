#include "thetak/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace thetak {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds effective_time_limit(const OracleLimits& limits) {
    if (limits.time_limit.count() > 0) return limits.time_limit;
    if (const char* env = std::getenv("THETAK_TIME_LIMIT_MS")) {
        long long ms = std::atoll(env);
        if (ms > 0) return std::chrono::milliseconds(ms);
    }
    return std::chrono::milliseconds(0);
}

struct Budget {
    long long node_limit;
    Clock::time_point deadline;
    bool has_deadline;
    long long nodes = 0;
    bool hit = false;

    explicit Budget(const OracleLimits& limits)
        : node_limit(limits.node_limit) {
        auto tl = effective_time_limit(limits);
        has_deadline = tl.count() > 0;
        if (has_deadline) deadline = Clock::now() + tl;
    }

    // Returns false once the budget is exhausted.
    bool tick() {
        if (hit) return false;
        ++nodes;
        if (nodes > node_limit) {
            hit = true;
            return false;
        }
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
            hit = true;
            return false;
        }
        return true;
    }
};

// Adjacency as per-vertex word vectors for fast set intersections.
struct BitGraph {
    int n;
    int words;
    std::vector<std::uint64_t> rows;  // n * words

    explicit BitGraph(const Graph& g) : n(g.order()), words((g.order() + 63) / 64) {
        rows.assign(static_cast<std::size_t>(n) * words, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && g.adjacent(i, j)) set(i, j);
    }

    void set(int i, int j) { rows[static_cast<std::size_t>(i) * words + (j >> 6)] |= 1ull << (j & 63); }
    const std::uint64_t* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * words; }
    bool adj(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
};

struct VertexSet {
    std::vector<std::uint64_t> w;

    explicit VertexSet(int words) : w(words, 0) {}
    void add(int v) { w[v >> 6] |= 1ull << (v & 63); }
    void remove(int v) { w[v >> 6] &= ~(1ull << (v & 63)); }
    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    void intersect(const std::uint64_t* other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>(i * 64 + b));
                x &= x - 1;
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Maximum clique core (Tomita-style: color-sorted candidates bound the clique
// extension). exact_alpha runs this on the complement.
// ---------------------------------------------------------------------------
struct CliqueSolver {
    const BitGraph& g;
    Budget& budget;
    std::vector<int> best;
    std::vector<int> current;

    CliqueSolver(const BitGraph& graph, Budget& b) : g(graph), budget(b) {}

    void run() {
        VertexSet all(g.words);
        std::vector<int> order(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> deg(g.n);
        for (int v = 0; v < g.n; ++v) {
            int d = 0;
            for (int w = 0; w < g.words; ++w) d += std::popcount(g.row(v)[w]);
            deg[v] = d;
        }
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
        });
        // greedy seed: keeps budget-limited runs useful and tightens pruning
        for (int v : order) {
            bool ok = true;
            for (int u : best)
                if (!g.adj(v, u)) {
                    ok = false;
                    break;
                }
            if (ok) best.push_back(v);
        }
        for (int v : order) all.add(v);
        expand(all, order);
    }

private:
    // Greedy coloring of the candidates in `order`; vertices come back sorted
    // by color class so the bound |current| + color prunes from the back.
    void color_sort(const VertexSet& cands, const std::vector<int>& order,
                    std::vector<int>& out, std::vector<int>& colors) {
        out.clear();
        colors.clear();
        std::vector<VertexSet> classes;
        for (int v : order) {
            if (!cands.contains(v)) continue;
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflict = false;
                const std::uint64_t* rv = g.row(v);
                for (int w = 0; w < g.words; ++w)
                    if (classes[c].w[w] & rv[w]) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (c == classes.size()) classes.emplace_back(g.words);
            classes[c].add(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            classes[c].for_each([&](int v) {
                out.push_back(v);
                colors.push_back(static_cast<int>(c) + 1);
            });
    }

    void expand(const VertexSet& cands, const std::vector<int>& order) {
        if (!budget.tick()) return;
        std::vector<int> sorted, colors;
        color_sort(cands, order, sorted, colors);
        VertexSet remaining = cands;
        for (int i = static_cast<int>(sorted.size()) - 1; i >= 0; --i) {
            if (budget.hit) return;
            if (static_cast<int>(current.size()) + colors[i] <=
                static_cast<int>(best.size()))
                return;
            int v = sorted[i];
            current.push_back(v);
            VertexSet next = remaining;
            next.intersect(g.row(v));
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next, order);
            }
            current.pop_back();
            remaining.remove(v);
        }
    }
};

std::vector<int> greedy_clique(const Graph& g) {
    int n = g.order();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg = g.degrees();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(v, u)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return clique;
}

// DSATUR greedy coloring; returns (colors used, assignment).
std::pair<int, std::vector<int>> greedy_dsatur(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> deg = g.degrees();
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::vector<char> seen(used + 1, 0);
            int sat = 0;
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u) && color[u] != -1 && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            if (sat > pick_sat || (sat == pick_sat && deg[v] > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg[v];
            }
        }
        std::vector<char> banned(used + 1, 0);
        for (int u = 0; u < n; ++u)
            if (g.adjacent(pick, u) && color[u] != -1) banned[color[u]] = 1;
        int c = 0;
        while (c < used && banned[c]) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
    }
    return {used, color};
}

struct ColoringSolver {
    const Graph& g;
    Budget& budget;
    int n;
    std::vector<int> color;
    std::vector<int> deg;
    int best;
    std::vector<int> best_coloring;
    int lower;

    ColoringSolver(const Graph& graph, Budget& b, int lower_bound, int upper_bound,
                   std::vector<int> initial)
        : g(graph),
          budget(b),
          n(graph.order()),
          color(n, -1),
          deg(graph.degrees()),
          best(upper_bound),
          best_coloring(std::move(initial)),
          lower(lower_bound) {}

    void run() { recurse(0, 0); }

private:
    void recurse(int colored, int used) {
        if (budget.hit || best == lower) return;
        if (!budget.tick()) return;
        if (colored == n) {
            best = used;
            best_coloring = color;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        std::vector<char> seen(used, 0);
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u) && color[u] != -1 && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            if (sat > pick_sat || (sat == pick_sat && deg[v] > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg[v];
            }
        }
        std::vector<char> banned(used, 0);
        for (int u = 0; u < n; ++u)
            if (g.adjacent(pick, u) && color[u] != -1) banned[color[u]] = 1;
        for (int c = 0; c < used && c < best - 1; ++c) {
            if (banned[c]) continue;
            color[pick] = c;
            recurse(colored + 1, used);
            color[pick] = -1;
            if (budget.hit || best == lower) return;
        }
        if (used + 1 < best) {
            color[pick] = used;
            recurse(colored + 1, used + 1);
            color[pick] = -1;
        }
    }
};

}  // namespace

bool validate_coloring(const Graph& g, const std::vector<int>& coloring, int colors) {
    if (static_cast<int>(coloring.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (coloring[v] < 0 || coloring[v] >= colors) return false;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j) && coloring[i] == coloring[j]) return false;
    return true;
}

bool validate_independent_set(const Graph& g, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

OracleResult exact_chromatic(const Graph& g, const OracleLimits& limits) {
    Budget budget(limits);
    auto clique = greedy_clique(g);
    auto [ub, greedy] = greedy_dsatur(g);
    int lb = static_cast<int>(clique.size());

    ColoringSolver solver(g, budget, lb, ub, std::move(greedy));
    if (lb < ub) solver.run();

    OracleResult res;
    res.value = solver.best;
    res.coloring = solver.best_coloring;
    res.nodes = budget.nodes;
    res.limit_hit = budget.hit;
    if (!validate_coloring(g, res.coloring, res.value))
        throw std::logic_error("exact_chromatic produced an invalid coloring");
    return res;
}

OracleResult exact_alpha(const Graph& g, const OracleLimits& limits) {
    Budget budget(limits);
    BitGraph co(complement(g));
    CliqueSolver solver(co, budget);
    solver.run();

    OracleResult res;
    res.value = static_cast<int>(solver.best.size());
    res.vertex_set = solver.best;
    std::sort(res.vertex_set.begin(), res.vertex_set.end());
    res.nodes = budget.nodes;
    res.limit_hit = budget.hit;
    if (!validate_independent_set(g, res.vertex_set))
        throw std::logic_error("exact_alpha produced an invalid independent set");
    return res;
}

OracleResult exact_clique(const Graph& g, const OracleLimits& limits) {
    OracleResult res = exact_alpha(complement(g), limits);
    // witness vertices form a clique in g
    return res;
}

OracleResult exact_chi_k(const Graph& g, int k, const OracleLimits& limits) {
    if (k < 1) throw std::invalid_argument("exact_chi_k: k >= 1 required");
    if (k == 1) return exact_chromatic(g, limits);
    Graph blown = product(ProductKind::lexicographic, g, generate(FamilySpec::complete(k)));
    return exact_chromatic(blown, limits);
}

OracleResult exact_alpha_k(const Graph& g, int k, const OracleLimits& limits) {
    if (k < 1) throw std::invalid_argument("exact_alpha_k: k >= 1 required");
    if (k == 1) return exact_alpha(g, limits);
    Graph prod = product(ProductKind::cartesian, generate(FamilySpec::complete(k)), g);
    return exact_alpha(prod, limits);
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (!g.adjacent(v, u)) continue;
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace thetak
