#include "thetak/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "thetak/spectral.hpp"

namespace thetak {

namespace {

long long binomial_ll(int n, int m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    long long r = 1;
    for (int i = 1; i <= m; ++i) r = r * (n - m + i) / i;
    return r;
}

// Anchor values (theta at k=1) for circulant and general Johnson formulas,
// cached per family spec so repeated k reuse one solve.
double anchored_theta1(const FamilySpec& spec, const SolverConfig& cfg) {
    static std::mutex mtx;
    static std::unordered_map<std::string, double> cache;
    std::string key = spec.to_string();
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Graph g = generate(spec);
    double value;
    if (g.edge_transitive() && g.regular_degree())
        value = theta_k_symmetric(g, 1, cfg).value;
    else
        value = theta_k_sdp(g, 1, ThetaVariant::theta, cfg).value;
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::move(key), value);
    return value;
}

bool circulant_connected(const FamilySpec& spec) {
    int g = spec.n;
    for (int o : spec.offsets) g = std::gcd(g, o);
    return g == 1 && !spec.offsets.empty();
}

FormulaResult make(double value, std::string id,
                   std::vector<std::pair<std::string, bool>> checks = {}) {
    FormulaResult r;
    r.value = value;
    r.formula_id = std::move(id);
    r.applicability = std::move(checks);
    return r;
}

// Unsigned big integer, base 1e9 limbs; enough for exact binomial sums.
struct BigUint {
    std::vector<std::uint32_t> limbs;  // little-endian, base 1e9

    static constexpr std::uint64_t kBase = 1'000'000'000;

    BigUint() = default;
    explicit BigUint(std::uint64_t v) {
        while (v) {
            limbs.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    void add(const BigUint& o) {
        std::uint64_t carry = 0;
        std::size_t top = std::max(limbs.size(), o.limbs.size());
        limbs.resize(top, 0);
        for (std::size_t i = 0; i < top; ++i) {
            std::uint64_t s = carry + limbs[i] + (i < o.limbs.size() ? o.limbs[i] : 0);
            limbs[i] = static_cast<std::uint32_t>(s % kBase);
            carry = s / kBase;
        }
        if (carry) limbs.push_back(static_cast<std::uint32_t>(carry));
    }

    void mul_small(std::uint64_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : limbs) {
            std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(p % kBase);
            carry = p / kBase;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    std::string to_string() const {
        if (limbs.empty()) return "0";
        std::string s = std::to_string(limbs.back());
        for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
            std::string part = std::to_string(*it);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    std::optional<std::uint64_t> to_u64() const {
        std::uint64_t v = 0;
        for (auto it = limbs.rbegin(); it != limbs.rend(); ++it) {
            if (v > (std::numeric_limits<std::uint64_t>::max() - *it) / kBase)
                return std::nullopt;
            v = v * kBase + *it;
        }
        return v;
    }
};

}  // namespace

double odd_cycle_theta(int n) {
    double c = std::cos(std::numbers::pi / n);
    return n * c / (1.0 + c);
}

std::optional<FormulaResult> theta_k_formula(const FamilySpec& spec, int k,
                                             const SolverConfig& cfg) {
    if (k < 1) throw std::invalid_argument("theta_k_formula: k >= 1 required");

    switch (spec.family) {
        case Family::complete: {
            if (k > spec.n) return std::nullopt;
            return make(k, "complete-linear", {{"k <= n", true}});
        }
        case Family::cycle: {
            double theta1 =
                spec.n % 2 == 1 ? odd_cycle_theta(spec.n) : spec.n / 2.0;
            return make(std::min<double>(k * theta1, spec.n), "cycle-scaled",
                        {{"connected circulant", true}});
        }
        case Family::circulant: {
            if (!circulant_connected(spec)) return std::nullopt;
            double theta1 = anchored_theta1(spec, cfg);
            return make(std::min<double>(k * theta1, spec.n), "circulant-scaled",
                        {{"connected circulant", true}});
        }
        case Family::multipartite: {
            int p = static_cast<int>(spec.parts.size());
            if (k >= p)
                return make(spec.n, "multipartite-saturated", {{"k >= parts", true}});
            long long sum = 0;
            for (int i = 0; i < k; ++i) sum += spec.parts[i];
            return make(static_cast<double>(sum), "multipartite-partsum",
                        {{"k <= parts", true}});
        }
        case Family::kneser: {
            int n = spec.n, m = spec.m;
            bool linear = k <= n / m && k <= n - 2 * m + 1;
            if (linear)
                return make(static_cast<double>(k) * binomial_ll(n - 1, m - 1),
                            "kneser-linear",
                            {{"k <= floor(n/m)", true}, {"k <= n-2m+1", true}});
            return make(static_cast<double>(binomial_ll(n, m)), "kneser-saturated",
                        {{"k > n/m or k > n-2m+1", true}});
        }
        case Family::johnson: {
            int n = spec.n, m = spec.m, f = spec.f;
            if (f == 0) return theta_k_formula(FamilySpec::kneser(n, m), k, cfg);
            long long v = binomial_ll(n, m);
            if (f == m)
                return make(static_cast<double>(v), "edgeless",
                            {{"f == m (no edges)", true}});
            if (n <= 4) return std::nullopt;  // verified numerically at this size
            if (f == m - 1) {
                if (k <= n - m + 1)
                    return make(static_cast<double>(k) / (n + 1) * binomial_ll(n + 1, m),
                                "johnson-consecutive", {{"k <= n-m+1", true}});
                return make(static_cast<double>(v), "johnson-saturated",
                            {{"k > n-m+1", true}});
            }
            if (k > n) return std::nullopt;
            double theta1 = anchored_theta1(spec, cfg);
            return make(std::min(k * theta1, static_cast<double>(v)), "johnson-min",
                        {{"k <= n", true}});
        }
        case Family::paley: {
            // Paley graphs are strongly regular with algebraic parameters.
            SrgParams p;
            p.n = spec.q;
            p.d = (spec.q - 1) / 2;
            p.lambda = (spec.q - 5) / 4;
            p.mu = (spec.q - 1) / 4;
            double root = std::sqrt(static_cast<double>(spec.q));
            p.r = (-1.0 + root) / 2.0;
            p.s = (-1.0 - root) / 2.0;
            double theta1 = (p.r + p.n - p.d) / (p.r + 1.0);
            return make(std::min<double>(k * theta1, p.n), "srg-ratio",
                        {{"strongly regular", true}});
        }
        case Family::gname: {
            int n = spec.n;
            if (n < 5 || k != n - 2) return std::nullopt;
            double value =
                n - 2 + 2.0 / (n - 3) * std::sqrt(static_cast<double>(n - 2) * (n - 4));
            return make(value, "gname-penultimate",
                        {{"n >= 5", true}, {"k == n-2", true}});
        }
        case Family::orthogonality: {
            int n = spec.n;
            if (k > n) return std::nullopt;
            double value = static_cast<double>(k) * std::ldexp(1.0, n) / n;
            return make(value, "orthogonality-ratio", {{"k <= n", true}});
        }
        default:
            return std::nullopt;
    }
}

double SrgReducedSolution::min_slack() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& [name, s] : slacks) m = std::min(m, s);
    return m;
}

namespace {

void validate_srg(const SrgParams& p) {
    if (p.n <= 0 || p.d <= 0 || p.d >= p.n - 1 || p.r < 0 || p.s >= -1)
        throw std::invalid_argument(
            "srg parameters invalid (need 1 <= d <= n-2, r >= 0, s < -1)");
    double scale = std::max(1.0, static_cast<double>(p.n));
    bool eigen_ok = std::abs(p.r * p.s - (p.mu - p.d)) <= 1e-9 * scale &&
                    std::abs(p.r + p.s - (p.lambda - p.mu)) <= 1e-9 * scale;
    bool count_ok =
        (p.n - p.d - 1) * p.mu == p.d * (p.d - p.lambda - 1);
    if (!eigen_ok || !count_ok)
        throw std::invalid_argument("srg parameters violate the srg identities");
}

std::vector<std::pair<std::string, double>> matr_slacks(const SrgParams& p, int k,
                                                        double y1, double y2) {
    double n = p.n, d = p.d;
    return {
        {"y1+(n-d-1)y2-(n/k)y1^2 >= 0", y1 + (n - d - 1) * y2 - n / k * y1 * y1},
        {"y1-(r+1)y2 >= 0", y1 - (p.r + 1) * y2},
        {"y1-(s+1)y2 >= 0", y1 - (p.s + 1) * y2},
        {"y1 <= 1", 1.0 - y1},
        {"y1 >= 0", y1},
        {"y2 >= 0", y2},
    };
}

}  // namespace

SrgReducedSolution srg_theta3(const SrgParams& p, int k) {
    validate_srg(p);
    if (k < 1 || k > p.n) throw std::invalid_argument("srg_theta3: k out of range");

    double n = p.n, d = p.d, r = p.r;
    double ratio = (r + n - d) / (r + 1.0);

    SrgReducedSolution sol;
    sol.program = SrgReducedSolution::Program::matrix_lifting;
    double y1 = k * ratio / n;
    if (y1 <= 1.0) {
        sol.y1 = y1;
        sol.y2 = k * (n + r - d) / (n * (r + 1.0) * (r + 1.0));
    } else {
        sol.y1 = 1.0;
        sol.y2 = (n - k) / (k * (n - d - 1.0));
    }
    sol.objective = n * sol.y1;
    sol.slacks = matr_slacks(p, k, sol.y1, sol.y2);
    if (sol.min_slack() < -1e-9)
        throw std::logic_error("srg_theta3: constructed point is infeasible");
    return sol;
}

double srg_prime_cart_window(const SrgParams& p) {
    return p.n * (p.r + 1.0) / (p.r + p.n - p.d);
}

SrgReducedSolution srg_theta_prime_cart(const SrgParams& p, int k) {
    validate_srg(p);
    if (k < 1) throw std::invalid_argument("srg_theta_prime_cart: k >= 1 required");
    if (!(k < srg_prime_cart_window(p)))
        throw std::invalid_argument(
            "srg_theta_prime_cart: k outside the window k < n(r+1)/(r+n-d)");

    double n = p.n, d = p.d, r = p.r, s = p.s;
    SrgReducedSolution base = srg_theta3(p, k);

    SrgReducedSolution sol;
    sol.program = SrgReducedSolution::Program::cartesian_prime;
    sol.x1 = base.y1;
    sol.x2 = base.y2;
    sol.z1 = n * (r + 1.0) * sol.x1 * sol.x1 / (k * (d + r * (n - 1.0)));
    sol.z2 = sol.z1 * r / (r + 1.0);
    sol.objective = n * sol.x1;

    double x1 = sol.x1, x2 = sol.x2, z1 = sol.z1, z2 = sol.z2;
    double dz = d * z1 + (n - d - 1) * z2;
    sol.slacks = {
        {"x1+(n-d-1)x2-(dz1+(n-d-1)z2) >= 0", x1 + (n - d - 1) * x2 - dz},
        {"x1-(r+1)x2-(rz1-(r+1)z2) >= 0",
         x1 - (r + 1) * x2 - (r * z1 - (r + 1) * z2)},
        {"x1-(s+1)x2-(sz1-(s+1)z2) >= 0",
         x1 - (s + 1) * x2 - (s * z1 - (s + 1) * z2)},
        {"x1+(n-d-1)x2+(k-1)(dz1+(n-d-1)z2)-nx1^2 >= 0",
         x1 + (n - d - 1) * x2 + (k - 1) * dz - n * x1 * x1},
        {"x1-(r+1)x2+(k-1)(rz1-(r+1)z2) >= 0",
         x1 - (r + 1) * x2 + (k - 1) * (r * z1 - (r + 1) * z2)},
        {"x1-(s+1)x2+(k-1)(sz1-(s+1)z2) >= 0",
         x1 - (s + 1) * x2 + (k - 1) * (s * z1 - (s + 1) * z2)},
        {"x1 <= 1", 1.0 - x1},
        {"x1 >= 0", x1},
        {"x2 >= 0", x2},
        {"z1 >= 0", z1},
        {"z2 >= 0", z2},
    };
    if (sol.min_slack() < -1e-9)
        throw std::logic_error("srg_theta_prime_cart: constructed point is infeasible");
    return sol;
}

double srg_matr_grid_max(const SrgParams& p, int k, double resolution) {
    validate_srg(p);
    double best = 0.0;
    int steps = static_cast<int>(std::lround(1.0 / resolution));
    for (int i = 0; i <= steps; ++i) {
        double y1 = static_cast<double>(i) / steps;
        for (int j = 0; j <= steps; ++j) {
            double y2 = static_cast<double>(j) / steps;
            auto slacks = matr_slacks(p, k, y1, y2);
            bool feasible = true;
            for (const auto& [name, s] : slacks)
                if (s < 0) {
                    feasible = false;
                    break;
                }
            if (feasible) best = std::max(best, p.n * y1);
        }
    }
    return best;
}

OrthAlphaBound orth_alpha_lb(int n) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("orth_alpha_lb: n must be a multiple of 4");
    // Pascal-row walk keeps every binomial exact.
    BigUint total(0);
    BigUint coeff(1);  // C(n-1, 0)
    for (int i = 0; i <= n / 4 - 1; ++i) {
        if (i > 0) {
            // C(n-1, i) = C(n-1, i-1) * (n - i) / i
            coeff.mul_small(static_cast<std::uint64_t>(n - i));
            // exact division by small i: limbs high-to-low
            std::uint64_t rem = 0;
            for (auto it = coeff.limbs.rbegin(); it != coeff.limbs.rend(); ++it) {
                std::uint64_t cur = rem * BigUint::kBase + *it;
                *it = static_cast<std::uint32_t>(cur / i);
                rem = cur % i;
            }
            while (!coeff.limbs.empty() && coeff.limbs.back() == 0)
                coeff.limbs.pop_back();
        }
        total.add(coeff);
    }
    total.mul_small(4);

    OrthAlphaBound out;
    out.decimal = total.to_string();
    out.value = total.to_u64();
    return out;
}

namespace {

struct Candidate {
    double value;
    std::string source;
};

void consider(std::vector<Candidate>& v, double value, std::string source) {
    v.push_back({value, std::move(source)});
}

}  // namespace

BoundPair chi_k_bounds(const Graph& g, int k, const ExactValues& exact) {
    if (k < 1) throw std::invalid_argument("chi_k_bounds: k >= 1 required");
    int n = g.order();
    if (g.edge_count() == 0)
        return {{static_cast<double>(k), "edgeless"}, {static_cast<double>(k), "edgeless"}};

    std::vector<Candidate> lower, upper;
    auto collapse = [&](double value, const std::string& source) {
        consider(lower, value, source);
        consider(upper, value, source);
    };

    // family-exact results
    if (g.spec()) {
        const FamilySpec& s = *g.spec();
        if (s.family == Family::hamming || s.family == Family::orthogonality) {
            int hn = s.n;
            int hq = s.family == Family::orthogonality ? 2 : s.q;
            std::set<int> dist = s.family == Family::orthogonality
                                     ? std::set<int>{hn / 2}
                                     : s.distances;
            for (auto it = dist.begin(); it != dist.end();)
                it = *it > hn ? dist.erase(it) : std::next(it);
            if (dist == std::set<int>{1}) collapse(k * hq, "hamming-singleton");
            if (dist == std::set<int>{hn} && hn > 1)
                collapse(k * hq, "hamming-full-distance");
            if (hq == 2 && dist.size() == 1 && *dist.begin() % 2 == 1)
                collapse(2.0 * k, "binary-odd-distance");
            if (!dist.empty()) {
                int f = *dist.begin();
                bool tail = static_cast<int>(dist.size()) == hn - f + 1 &&
                            *dist.rbegin() == hn;
                if (tail && hq >= hn - f + 2)
                    collapse(k * std::pow(static_cast<double>(hq), hn - f + 1),
                             "hamming-tail");
            }
        }
        if (s.family == Family::johnson && s.m == 2 && s.f == 1 && s.n >= 4) {
            consider(lower, static_cast<double>(k) * (s.n - 1), "triangular");
            consider(upper, static_cast<double>(k) * (2 * ((s.n - 1) / 2) + 1),
                     "triangular");
        }
    }
    if (is_bipartite(g)) collapse(2.0 * k, "bipartite");
    if (exact.omega && exact.chi && *exact.omega == *exact.chi)
        collapse(static_cast<double>(k) * *exact.chi, "weakly-perfect");

    // any edge forces two disjoint color sets
    consider(lower, 2.0 * k, "adjacent-pair");
    if (exact.omega) consider(lower, static_cast<double>(k) * *exact.omega, "clique-multiple");
    if (exact.alpha)
        consider(lower, static_cast<double>(k) * n / *exact.alpha, "vertex-count-ratio");

    auto degs = g.degrees();
    if (n <= 1024) {  // dense eigenwork; larger graphs keep the cheap bounds
        Spectrum adj = spectrum_of(adjacency_matrix(g));
        double lam1 = adj.largest(), lamn = adj.smallest();
        int delta_min = *std::min_element(degs.begin(), degs.end());
        if (lam1 * lamn != 0.0)
            consider(lower,
                     k * (lam1 * lamn - static_cast<double>(delta_min) * delta_min) /
                         (lam1 * lamn),
                     "adjacency-ratio");
        Spectrum lap = spectrum_of(laplacian_matrix(g));
        double avg_deg = 2.0 * g.edge_count() / n;
        if (lap.largest() > avg_deg)
            consider(lower, k * lap.largest() / (lap.largest() - avg_deg),
                     "laplacian-ratio");
    }

    if (exact.chi)
        consider(upper, static_cast<double>(k) * *exact.chi, "chromatic-multiple");
    int delta_max = *std::max_element(degs.begin(), degs.end());
    consider(upper, static_cast<double>(k) * (delta_max + 1), "greedy-degree");

    BoundPair out;
    out.lower = {lower.front().value, lower.front().source};
    for (const auto& c : lower)
        if (c.value > out.lower.value) out.lower = {c.value, c.source};
    out.upper = {upper.front().value, upper.front().source};
    for (const auto& c : upper)
        if (c.value < out.upper.value) out.upper = {c.value, c.source};
    return out;
}

NordhausBounds nordhaus_bounds(int n, int k) {
    NordhausBounds b;
    double kk = k;
    b.product_lower = kk * kk * n;
    b.product_upper = kk * kk * (n + 1.0) * (n + 1.0) / 4.0;
    b.sum_lower = 2.0 * kk * std::sqrt(static_cast<double>(n));
    b.sum_upper = kk * (n + 1.0);
    return b;
}

}  // namespace thetak
