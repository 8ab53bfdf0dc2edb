#include "thetak/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace thetak {

namespace {

constexpr int kMaxVertices = 8192;  // desk scale, Omega_12 = 4096 fits

long long binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    long long r = 1;
    for (int i = 1; i <= m; ++i) r = r * (n - m + i) / i;
    return r;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// q = p^e with p prime, e >= 1
bool prime_power(int q, int& p, int& e) {
    if (q < 2) return false;
    for (int cand = 2; cand <= q; ++cand) {
        if (q % cand != 0) continue;
        if (!is_prime(cand)) return false;  // smallest divisor must be prime
        p = cand;
        e = 0;
        int rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        return rest == 1;
    }
    return false;
}

// GF(p^e) with elements indexed by base-p digit vectors (digit i = coefficient
// of x^i), arithmetic modulo a monic irreducible polynomial of degree e.
struct GaloisField {
    int p, e, q;
    std::vector<int> modulus;  // coefficients of x^0..x^(e-1) of the monic modulus

    explicit GaloisField(int p_, int e_) : p(p_), e(e_) {
        q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (e == 1) return;
        modulus = find_irreducible();
    }

    std::vector<int> digits(int a, int len) const {
        std::vector<int> d(len, 0);
        for (int i = 0; i < len && a > 0; ++i, a /= p) d[i] = a % p;
        return d;
    }

    int sub(int a, int b) const {
        int r = 0, pw = 1;
        for (int i = 0; i < e; ++i, pw *= p) {
            int da = a % p, db = b % p;
            a /= p;
            b /= p;
            r += ((da - db + p) % p) * pw;
        }
        return r;
    }

    int mul(int a, int b) const {
        if (e == 1) return static_cast<int>((static_cast<long long>(a) * b) % p);
        std::vector<int> da = digits(a, e), db = digits(b, e);
        std::vector<int> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce modulo the monic modulus: x^e = -modulus[0..e-1]
        for (int i = 2 * e - 2; i >= e; --i) {
            int c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < e; ++j)
                prod[i - e + j] = (prod[i - e + j] + c * (p - modulus[j])) % p;
        }
        int r = 0, pw = 1;
        for (int i = 0; i < e; ++i, pw *= p) r += prod[i] * pw;
        return r;
    }

private:
    // Sieve the reducible monic polynomials of degree e (all products of lower
    // degree monic pairs), then pick the first survivor.
    std::vector<int> find_irreducible() const {
        int pe = q;  // number of monic degree-e polys, indexed by low coefficients
        std::vector<char> reducible(pe, 0);
        for (int a = 1; a <= e / 2; ++a) {
            int pa = 1, pb = 1;
            for (int i = 0; i < a; ++i) pa *= p;
            for (int i = 0; i < e - a; ++i) pb *= p;
            for (int u = 0; u < pa; ++u) {
                for (int v = 0; v < pb; ++v) {
                    // (x^a + u) * (x^(e-a) + v) with u, v digit vectors
                    std::vector<int> du = digits_n(u, a), dv = digits_n(v, e - a);
                    du.push_back(1);
                    dv.push_back(1);
                    std::vector<int> prod(e + 1, 0);
                    for (std::size_t i = 0; i < du.size(); ++i)
                        for (std::size_t j = 0; j < dv.size(); ++j)
                            prod[i + j] = (prod[i + j] + du[i] * dv[j]) % p;
                    int idx = 0, pw = 1;
                    for (int i = 0; i < e; ++i, pw *= p) idx += prod[i] * pw;
                    reducible[idx] = 1;
                }
            }
        }
        for (int idx = 0; idx < pe; ++idx) {
            if (!reducible[idx]) {
                std::vector<int> mod = digits_n(idx, e);
                return mod;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::vector<int> digits_n(int a, int len) const {
        std::vector<int> d(len, 0);
        for (int i = 0; i < len && a > 0; ++i, a /= p) d[i] = a % p;
        return d;
    }
};

void check(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::custom: return "custom";
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::circulant: return "circulant";
        case Family::multipartite: return "multipartite";
        case Family::kneser: return "kneser";
        case Family::johnson: return "johnson";
        case Family::hamming: return "hamming";
        case Family::paley: return "paley";
        case Family::orthogonality: return "orthogonality";
        case Family::gname: return "gname";
        case Family::product: return "product";
    }
    return "custom";
}

std::string product_name(ProductKind kind) {
    switch (kind) {
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::tensor: return "tensor";
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::strong: return "strong";
        case ProductKind::disjunction: return "disjunction";
    }
    return "?";
}

FamilySpec FamilySpec::complete(int n) {
    check(n >= 1, "complete: n >= 1 required");
    FamilySpec s;
    s.family = Family::complete;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::cycle(int n) {
    check(n >= 3, "cycle: n >= 3 required");
    FamilySpec s;
    s.family = Family::cycle;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::circulant(int n, std::set<int> offsets) {
    check(n >= 3, "circulant: n >= 3 required");
    for (int o : offsets)
        check(o >= 1 && o <= n / 2, "circulant: offsets must lie in 1..n/2");
    FamilySpec s;
    s.family = Family::circulant;
    s.n = n;
    s.offsets = std::move(offsets);
    return s;
}

FamilySpec FamilySpec::multipartite(std::vector<int> parts) {
    check(!parts.empty(), "multipartite: at least one part");
    for (int p : parts) check(p >= 1, "multipartite: part sizes >= 1");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    FamilySpec s;
    s.family = Family::multipartite;
    s.parts = std::move(parts);
    s.n = std::accumulate(s.parts.begin(), s.parts.end(), 0);
    return s;
}

FamilySpec FamilySpec::kneser(int n, int m) {
    check(m >= 1 && 2 * m <= n, "kneser: 1 <= m <= n/2 required");
    FamilySpec s;
    s.family = Family::kneser;
    s.n = n;
    s.m = m;
    return s;
}

FamilySpec FamilySpec::johnson(int n, int m, int f) {
    check(m >= 1 && 2 * m <= n, "johnson: 1 <= m <= n/2 required");
    check(f >= 0 && f <= m, "johnson: 0 <= f <= m required");
    FamilySpec s;
    s.family = Family::johnson;
    s.n = n;
    s.m = m;
    s.f = f;
    return s;
}

FamilySpec FamilySpec::hamming(int n, int q, std::set<int> distances) {
    check(n >= 1, "hamming: n >= 1 required");
    check(q >= 1, "hamming: q >= 1 required");
    for (int d : distances) check(d >= 1, "hamming: distances must be positive");
    FamilySpec s;
    s.family = Family::hamming;
    s.n = n;
    s.q = q;
    s.distances = std::move(distances);
    return s;
}

FamilySpec FamilySpec::paley(int q) {
    int p = 0, e = 0;
    check(prime_power(q, p, e), "paley: q must be a prime power");
    check(q % 4 == 1, "paley: q = 1 mod 4 required");
    FamilySpec s;
    s.family = Family::paley;
    s.q = q;
    s.n = q;
    return s;
}

FamilySpec FamilySpec::orthogonality(int n) {
    check(n >= 4 && n % 4 == 0,
          "orthogonality: n must be a positive multiple of 4 (odd n is edgeless)");
    FamilySpec s;
    s.family = Family::orthogonality;
    s.n = n;
    return s;
}

FamilySpec FamilySpec::gname(int n) {
    check(n >= 4, "gname: n >= 4 required");
    FamilySpec s;
    s.family = Family::gname;
    s.n = n;
    return s;
}

namespace {

std::vector<std::string> split_args(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

std::set<int> parse_set(const std::string& s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw std::invalid_argument("expected {..} set, got '" + s + "'");
    std::set<int> out;
    for (const auto& tok : split_args(s.substr(1, s.size() - 2)))
        out.insert(parse_int(tok));
    return out;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<std::string> args;
    if (colon != std::string::npos) args = split_args(text.substr(colon + 1));

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("family '" + name + "' expects " +
                                        std::to_string(k) + " argument(s)");
    };
    if (name == "complete") {
        want(1);
        return complete(parse_int(args[0]));
    }
    if (name == "cycle") {
        want(1);
        return cycle(parse_int(args[0]));
    }
    if (name == "circulant") {
        want(2);
        return circulant(parse_int(args[0]), parse_set(args[1]));
    }
    if (name == "multipartite") {
        if (args.empty()) throw std::invalid_argument("multipartite needs part sizes");
        std::vector<int> parts;
        for (const auto& a : args) parts.push_back(parse_int(a));
        return multipartite(std::move(parts));
    }
    if (name == "kneser") {
        want(2);
        return kneser(parse_int(args[0]), parse_int(args[1]));
    }
    if (name == "johnson") {
        want(3);
        return johnson(parse_int(args[0]), parse_int(args[1]), parse_int(args[2]));
    }
    if (name == "hamming") {
        want(3);
        return hamming(parse_int(args[0]), parse_int(args[1]), parse_set(args[2]));
    }
    if (name == "paley") {
        want(1);
        return paley(parse_int(args[0]));
    }
    if (name == "orthogonality") {
        want(1);
        return orthogonality(parse_int(args[0]));
    }
    if (name == "gname") {
        want(1);
        return gname(parse_int(args[0]));
    }
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << family_name(family);
    auto put_set = [&](const std::set<int>& s) {
        os << ",{";
        bool first = true;
        for (int v : s) {
            if (!first) os << ',';
            os << v;
            first = false;
        }
        os << '}';
    };
    switch (family) {
        case Family::complete:
        case Family::cycle:
        case Family::orthogonality:
        case Family::gname:
            os << ':' << n;
            break;
        case Family::circulant:
            os << ':' << n;
            put_set(offsets);
            break;
        case Family::multipartite: {
            os << ':';
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << ',';
                os << parts[i];
            }
            break;
        }
        case Family::kneser:
            os << ':' << n << ',' << m;
            break;
        case Family::johnson:
            os << ':' << n << ',' << m << ',' << f;
            break;
        case Family::hamming:
            os << ':' << n << ',' << q;
            put_set(distances);
            break;
        case Family::paley:
            os << ':' << q;
            break;
        default:
            break;
    }
    return os.str();
}

void Graph::allocate(int n) {
    check(n >= 1, "graph order must be positive");
    check(n <= kMaxVertices, "graph order exceeds the dense-adjacency cap");
    n_ = n;
    stride_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * stride_, 0);
}

void Graph::set_edge(int i, int j) {
    bits_[static_cast<std::size_t>(i) * stride_ + (j >> 6)] |= 1ull << (j & 63);
    bits_[static_cast<std::size_t>(j) * stride_ + (i >> 6)] |= 1ull << (i & 63);
}

void Graph::finalize_regularity() {
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return;
    regular_degree_ = d;
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < stride_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

long long Graph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string id) {
    Graph g;
    g.allocate(n);
    for (auto [i, j] : edges) {
        check(i >= 0 && i < n && j >= 0 && j < n, "edge endpoint out of range");
        check(i != j, "loops are not allowed");
        g.set_edge(i, j);
    }
    g.finalize_regularity();
    g.id_ = id.empty() ? ("custom:" + std::to_string(n) + "v") : std::move(id);
    return g;
}

namespace {

// Enumerate m-subsets of [n] as bitmasks in lexicographic order.
std::vector<std::uint64_t> subsets_of_size(int n, int m) {
    std::vector<std::uint64_t> out;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= 1ull << i;
        out.push_back(mask);
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    Graph g;
    g.spec_ = spec;
    g.family_ = spec.family;
    g.id_ = spec.to_string();

    switch (spec.family) {
        case Family::complete: {
            g.allocate(spec.n);
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) g.set_edge(i, j);
            g.vertex_transitive_ = g.edge_transitive_ = true;
            g.regular_degree_ = spec.n - 1;
            break;
        }
        case Family::cycle: {
            g.allocate(spec.n);
            for (int i = 0; i < spec.n; ++i) g.set_edge(i, (i + 1) % spec.n);
            g.vertex_transitive_ = g.edge_transitive_ = true;
            g.regular_degree_ = 2;
            break;
        }
        case Family::circulant: {
            g.allocate(spec.n);
            for (int i = 0; i < spec.n; ++i)
                for (int o : spec.offsets) g.set_edge(i, (i + o) % spec.n);
            g.vertex_transitive_ = true;
            g.finalize_regularity();
            break;
        }
        case Family::multipartite: {
            g.allocate(spec.n);
            std::vector<int> part_of(spec.n);
            int v = 0;
            for (std::size_t p = 0; p < spec.parts.size(); ++p)
                for (int i = 0; i < spec.parts[p]; ++i) part_of[v++] = static_cast<int>(p);
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j)
                    if (part_of[i] != part_of[j]) g.set_edge(i, j);
            g.finalize_regularity();
            break;
        }
        case Family::kneser:
        case Family::johnson: {
            int want = spec.family == Family::kneser ? 0 : spec.f;
            long long v = binomial(spec.n, spec.m);
            check(v <= kMaxVertices, "johnson/kneser graph exceeds the vertex cap");
            auto subsets = subsets_of_size(spec.n, spec.m);
            g.allocate(static_cast<int>(v));
            for (std::size_t i = 0; i < subsets.size(); ++i)
                for (std::size_t j = i + 1; j < subsets.size(); ++j)
                    if (std::popcount(subsets[i] & subsets[j]) == want)
                        g.set_edge(static_cast<int>(i), static_cast<int>(j));
            g.vertex_transitive_ = g.edge_transitive_ = true;
            g.regular_degree_ = static_cast<int>(
                binomial(spec.m, want) * binomial(spec.n - spec.m, spec.m - want));
            break;
        }
        case Family::hamming:
        case Family::orthogonality: {
            int n = spec.n, q = spec.family == Family::orthogonality ? 2 : spec.q;
            std::set<int> dist = spec.family == Family::orthogonality
                                     ? std::set<int>{n / 2}
                                     : spec.distances;
            for (auto it = dist.begin(); it != dist.end();) {
                if (*it > n) {
                    std::fprintf(stderr,
                                 "thetak: hamming distance %d exceeds word length %d, "
                                 "ignored (no such edges exist)\n",
                                 *it, n);
                    it = dist.erase(it);
                } else {
                    ++it;
                }
            }
            long long v = 1;
            for (int i = 0; i < n; ++i) {
                v *= q;
                check(v <= kMaxVertices, "hamming graph exceeds the vertex cap");
            }
            g.allocate(static_cast<int>(v));
            if (q == 2) {
                for (int a = 0; a < v; ++a)
                    for (int b = a + 1; b < v; ++b)
                        if (dist.count(std::popcount(static_cast<unsigned>(a ^ b))))
                            g.set_edge(a, b);
            } else {
                std::vector<std::vector<int>> dig(v, std::vector<int>(n));
                for (int a = 0; a < v; ++a) {
                    int x = a;
                    for (int i = 0; i < n; ++i, x /= q) dig[a][i] = x % q;
                }
                for (int a = 0; a < v; ++a)
                    for (int b = a + 1; b < v; ++b) {
                        int d = 0;
                        for (int i = 0; i < n; ++i) d += dig[a][i] != dig[b][i];
                        if (dist.count(d)) g.set_edge(a, b);
                    }
            }
            g.vertex_transitive_ = true;
            g.edge_transitive_ = dist.size() == 1;
            long long deg = 0;
            for (int f : dist) {
                long long term = binomial(n, f);
                for (int i = 0; i < f; ++i) term *= q - 1;
                deg += term;
            }
            g.regular_degree_ = static_cast<int>(deg);
            break;
        }
        case Family::paley: {
            int p = 0, e = 0;
            prime_power(spec.q, p, e);
            GaloisField gf(p, e);
            std::vector<char> square(spec.q, 0);
            for (int x = 1; x < spec.q; ++x) square[gf.mul(x, x)] = 1;
            g.allocate(spec.q);
            for (int a = 0; a < spec.q; ++a)
                for (int b = a + 1; b < spec.q; ++b)
                    if (square[gf.sub(a, b)]) g.set_edge(a, b);
            g.vertex_transitive_ = g.edge_transitive_ = true;
            g.regular_degree_ = (spec.q - 1) / 2;
            break;
        }
        case Family::gname: {
            g.allocate(spec.n);
            for (int i = 0; i < spec.n - 1; ++i)
                for (int j = i + 1; j < spec.n - 1; ++j) g.set_edge(i, j);
            g.set_edge(spec.n - 2, spec.n - 1);
            break;
        }
        default:
            throw std::invalid_argument("cannot generate family '" +
                                        family_name(spec.family) + "'");
    }
    return g;
}

Graph generate(const std::string& spec_text) {
    return generate(FamilySpec::parse(spec_text));
}

Graph complement(const Graph& g) {
    // Kneser(n,2) complement is the triangular Johnson graph J(n,2,1).
    if (g.family() == Family::kneser && g.spec() && g.spec()->m == 2)
        return generate(FamilySpec::johnson(g.spec()->n, 2, 1));

    Graph h;
    h.allocate(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) h.set_edge(i, j);
    h.family_ = Family::custom;
    // Vertex transitivity survives complementation; edge transitivity does not.
    h.vertex_transitive_ = g.vertex_transitive();
    if (auto d = g.regular_degree()) h.regular_degree_ = g.order() - 1 - *d;
    h.id_ = "complement(" + g.id() + ")";
    return h;
}

Graph product(ProductKind kind, const Graph& a, const Graph& b) {
    check(a.order() >= 1 && b.order() >= 1, "product factors must be nonempty");
    long long nn = static_cast<long long>(a.order()) * b.order();
    check(nn <= kMaxVertices, "product order exceeds the dense-adjacency cap");

    Graph g;
    g.allocate(static_cast<int>(nn));
    int nb = b.order();
    for (int v1 = 0; v1 < a.order(); ++v1)
        for (int v2 = 0; v2 < b.order(); ++v2)
            for (int u1 = v1; u1 < a.order(); ++u1)
                for (int u2 = 0; u2 < b.order(); ++u2) {
                    int p = v1 * nb + v2, r = u1 * nb + u2;
                    if (r <= p) continue;
                    bool e1 = a.adjacent(v1, u1), e2 = b.adjacent(v2, u2);
                    bool same1 = v1 == u1, same2 = v2 == u2;
                    bool adj = false;
                    switch (kind) {
                        case ProductKind::lexicographic:
                            adj = e1 || (same1 && e2);
                            break;
                        case ProductKind::tensor:
                            adj = e1 && e2;
                            break;
                        case ProductKind::cartesian:
                            adj = (same1 && e2) || (same2 && e1);
                            break;
                        case ProductKind::strong:
                            adj = (same1 && e2) || (same2 && e1) || (e1 && e2);
                            break;
                        case ProductKind::disjunction:
                            adj = e1 || e2;
                            break;
                    }
                    if (adj) g.set_edge(p, r);
                }
    g.family_ = Family::product;
    g.finalize_regularity();
    g.id_ = product_name(kind) + "(" + a.id() + "," + b.id() + ")";
    return g;
}

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u) && !seen[u]) {
                seen[u] = 1;
                ++reached;
                bfs.push(u);
            }
    }
    return reached == n;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
    int n = g.order();
    if (n < 4) return std::nullopt;
    auto d_opt = g.regular_degree();
    if (!d_opt) {
        // regularity may be unknown for loaded graphs; check directly
        int d0 = g.degree(0);
        for (int v = 1; v < n; ++v)
            if (g.degree(v) != d0) return std::nullopt;
        d_opt = d0;
    }
    int d = *d_opt;
    if (d == 0 || d == n - 1) return std::nullopt;  // edgeless / complete excluded
    if (!is_connected(g)) return std::nullopt;

    int lambda = -1, mu = -1;
    int stride = g.stride();
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* ri = g.row(i);
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t* rj = g.row(j);
            int common = 0;
            for (int w = 0; w < stride; ++w) common += std::popcount(ri[w] & rj[w]);
            int& slot = g.adjacent(i, j) ? lambda : mu;
            if (slot == -1)
                slot = common;
            else if (slot != common)
                return std::nullopt;
        }
    }
    if (mu == -1) return std::nullopt;  // no non-adjacent pairs: complete

    SrgParams p;
    p.n = n;
    p.d = d;
    p.lambda = lambda;
    p.mu = mu;
    double half = 0.5 * (lambda - mu);
    double disc = std::sqrt(half * half + (d - mu));
    p.r = half + disc;
    p.s = half - disc;
    return p;
}

}  // namespace thetak
