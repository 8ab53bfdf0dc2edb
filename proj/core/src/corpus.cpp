#include "thetak/corpus.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace thetak {

namespace {

// Pair (i, j), i < j, packed as bit index.
int pair_index(int n, int i, int j) {
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += n - 1 - a;
    return idx + (j - i - 1);
}

bool mask_connected(int n, std::uint32_t mask) {
    std::uint32_t adj[8] = {0};
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t reach = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[v];
        frontier = next & ~reach;
        reach |= next;
    }
    return reach == (1u << n) - 1;
}

Graph mask_to_graph(int n, std::uint32_t mask, std::uint32_t index) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1u) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges,
                             "enum:" + std::to_string(n) + "#" + std::to_string(index));
}

// Enumerate isomorphism classes by sweeping all labeled graphs in ascending
// mask order and flooding each relabeling orbit with the adjacent
// transpositions (which generate S_n). The first mask reached in every orbit
// is its smallest member, so it becomes the representative.
std::vector<Graph> enumerate(int n, bool connected_only) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("graph enumeration supports 1 <= n <= 7");
    int pairs = n * (n - 1) / 2;
    std::uint32_t total = 1u << pairs;

    // remap[t][bit] = image of edge bit under the transposition (t, t+1)
    std::vector<std::vector<int>> remap(n - 1, std::vector<int>(pairs));
    for (int t = 0; t + 1 < n; ++t) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto swap_label = [&](int v) { return v == t ? t + 1 : v == t + 1 ? t : v; };
                int a = swap_label(i), b = swap_label(j);
                if (a > b) std::swap(a, b);
                remap[t][pair_index(n, i, j)] = pair_index(n, a, b);
            }
    }
    auto apply = [&](std::uint32_t mask, int t) {
        std::uint32_t out = 0;
        const auto& map = remap[t];
        while (mask) {
            int bit = std::countr_zero(mask);
            out |= 1u << map[bit];
            mask &= mask - 1;
        }
        return out;
    };

    std::vector<char> visited(total, 0);
    std::vector<std::uint32_t> queue;
    std::vector<Graph> out;
    for (std::uint32_t rep = 0; rep < total; ++rep) {
        if (visited[rep]) continue;
        queue.assign(1, rep);
        visited[rep] = 1;
        while (!queue.empty()) {
            std::uint32_t m = queue.back();
            queue.pop_back();
            for (int t = 0; t + 1 < n; ++t) {
                std::uint32_t img = apply(m, t);
                if (!visited[img]) {
                    visited[img] = 1;
                    queue.push_back(img);
                }
            }
        }
        if (connected_only && !mask_connected(n, rep)) continue;
        out.push_back(mask_to_graph(n, rep, static_cast<std::uint32_t>(out.size())));
    }
    return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n) { return enumerate(n, false); }

std::vector<Graph> connected_graphs(int n) { return enumerate(n, true); }

}  // namespace thetak
