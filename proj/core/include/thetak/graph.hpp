#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace thetak {

enum class Family {
    custom,
    complete,
    cycle,
    circulant,
    multipartite,
    kneser,
    johnson,
    hamming,
    paley,
    orthogonality,
    gname,
    product,
};

std::string family_name(Family f);

/// Parameters of a generated graph family. Only the fields relevant to the
/// chosen family are meaningful; construction validates the ranges.
struct FamilySpec {
    Family family = Family::custom;
    int n = 0;                 // order-like parameter (meaning depends on family)
    int m = 0;                 // subset size (kneser, johnson)
    int f = 0;                 // intersection size (johnson)
    int q = 0;                 // alphabet size (hamming) / field order (paley)
    std::vector<int> parts;    // multipartite part sizes, kept sorted descending
    std::set<int> offsets;     // circulant offsets
    std::set<int> distances;   // hamming distance set

    static FamilySpec complete(int n);
    static FamilySpec cycle(int n);
    static FamilySpec circulant(int n, std::set<int> offsets);
    static FamilySpec multipartite(std::vector<int> parts);
    static FamilySpec kneser(int n, int m);
    static FamilySpec johnson(int n, int m, int f);
    static FamilySpec hamming(int n, int q, std::set<int> distances);
    static FamilySpec paley(int q);
    static FamilySpec orthogonality(int n);
    static FamilySpec gname(int n);

    // Compact text form, e.g. "kneser:5,2", "hamming:4,2,{1,3}",
    // "circulant:9,{1,2}". parse() accepts exactly what to_string() emits.
    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

/// Parameters of a strongly regular graph together with its restricted
/// eigenvalues r >= 0 > s.
struct SrgParams {
    int n = 0;
    int d = 0;
    int lambda = 0;
    int mu = 0;
    double r = 0.0;
    double s = 0.0;
};

enum class ProductKind { lexicographic, tensor, cartesian, strong, disjunction };

std::string product_name(ProductKind kind);

/// Simple undirected graph over a dense bit-packed adjacency matrix.
/// Immutable after construction; generators attach family metadata and
/// transitivity flags that are never inferred from the raw adjacency.
class Graph {
public:
    Graph() = default;

    // Loads/tests: plain graph with no family metadata.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string id = {});

    int order() const { return n_; }

    bool adjacent(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] >>
                (j & 63)) & 1u;
    }

    int degree(int v) const;
    std::vector<int> degrees() const;
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // i < j, sorted
    std::vector<int> neighbors(int v) const;

    Family family() const { return family_; }
    const std::optional<FamilySpec>& spec() const { return spec_; }
    std::optional<int> regular_degree() const { return regular_degree_; }
    bool vertex_transitive() const { return vertex_transitive_; }
    bool edge_transitive() const { return edge_transitive_; }
    const std::string& id() const { return id_; }

    // Row access for bit-parallel scans (stride() words per row).
    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * stride_;
    }
    int stride() const { return stride_; }

private:
    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
    Family family_ = Family::custom;
    std::optional<FamilySpec> spec_;
    std::optional<int> regular_degree_;
    bool vertex_transitive_ = false;
    bool edge_transitive_ = false;
    std::string id_;

    void allocate(int n);
    void set_edge(int i, int j);
    void finalize_regularity();

    friend Graph generate(const FamilySpec& spec);
    friend Graph complement(const Graph& g);
    friend Graph product(ProductKind kind, const Graph& a, const Graph& b);
};

Graph generate(const FamilySpec& spec);

/// Convenience: generate(FamilySpec::parse(text)).
Graph generate(const std::string& spec_text);

Graph complement(const Graph& g);

/// Graph product on the row-major vertex set: (i, j) -> i * |V(b)| + j.
Graph product(ProductKind kind, const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Strongly-regular parameter detection by common-neighbor counting.
/// Returns nullopt for non-SRG inputs and for the excluded trivial cases
/// (disconnected, complete, edgeless).
std::optional<SrgParams> detect_srg(const Graph& g);

}  // namespace thetak
