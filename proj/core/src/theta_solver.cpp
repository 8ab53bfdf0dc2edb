#include "thetak/theta_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thetak {

std::string variant_name(ThetaVariant v) {
    return v == ThetaVariant::theta ? "theta" : "theta-prime";
}

std::string method_name(ThetaMethod m) {
    switch (m) {
        case ThetaMethod::sdp_splitting: return "sdp-splitting";
        case ThetaMethod::eig_subgradient: return "eig-subgradient";
        case ThetaMethod::symmetric_1d: return "symmetric-1d";
        case ThetaMethod::closed_form: return "closed-form";
    }
    return "?";
}

void SolverConfig::validate() const {
    if (max_iterations <= 0 || rho <= 0 || stop_tol <= 0 || subgradient_c <= 0 ||
        golden_tol <= 0 || size_cap <= 0)
        throw std::invalid_argument("solver config fields must be positive");
}

namespace {

using Edges = std::vector<std::pair<int, int>>;

// Orthogonal projection onto {Y : Y_ij = 0 on edges, tr Y = k}.
void project_affine(Matrix& y, const Edges& edges, double k) {
    for (auto [i, j] : edges) {
        y(i, j) = 0.0;
        y(j, i) = 0.0;
    }
    y.diagonal().array() += (k - y.trace()) / static_cast<double>(y.rows());
}

// Projection onto the spectral box {0 <= Y <= I}: clamp eigenvalues to [0, 1].
Matrix project_box(const Matrix& w) {
    Eigen::SelfAdjointEigenSolver<Matrix> es((w + w.transpose()) * 0.5);
    Eigen::VectorXd clamped =
        es.eigenvalues().cwiseMax(0.0).cwiseMin(1.0);
    return es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();
}

double affine_violation(const Matrix& y, const Edges& edges, double k,
                        bool nonneg) {
    double v = std::abs(y.trace() - k);
    for (auto [i, j] : edges) v = std::max(v, std::abs(y(i, j)));
    if (nonneg) v = std::max(v, std::max(0.0, -y.minCoeff()));
    return v;
}

// Cyclic projections until the iterate is feasible for every set to 5e-9.
// Each round ends on the spectral box so the eigenvalue bounds hold exactly;
// at least one round runs because the consensus average is not box-feasible.
// Returns the achieved violation of the remaining constraints.
double polish_to_feasibility(Matrix& y, const Edges& edges, double k,
                             bool nonneg) {
    double viol = 0.0;
    for (int round = 0; round < 300; ++round) {
        project_affine(y, edges, k);
        if (nonneg) y = y.cwiseMax(0.0);
        y = project_box(y);
        viol = affine_violation(y, edges, k, nonneg);
        if (viol <= 5e-9) break;
    }
    return viol;
}

struct GoldenResult {
    double x;
    double fx;
};

// Golden-section minimization of a unimodal f on [a, b].
template <typename F>
GoldenResult golden_section(F&& f, double a, double b, double xtol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace

double certificate_violation(const Graph& g, const ThetaResult& r) {
    if (!r.certificate) return 0.0;
    const Matrix& c = *r.certificate;
    double v = 0.0;
    if (r.method == ThetaMethod::sdp_splitting) {
        for (auto [i, j] : g.edges()) v = std::max(v, std::abs(c(i, j)));
        v = std::max(v, std::abs(c.trace() - r.k));
        Spectrum s = spectrum_of(c);
        v = std::max(v, std::max(0.0, s.largest() - 1.0));
        v = std::max(v, std::max(0.0, -s.smallest()));
        if (r.variant == ThetaVariant::theta_prime)
            v = std::max(v, std::max(0.0, -c.minCoeff()));
    } else {
        // eigenvalue-form certificate: ones on the diagonal and all non-edges
        for (int i = 0; i < g.order(); ++i)
            for (int j = i; j < g.order(); ++j)
                if (i == j || !g.adjacent(i, j))
                    v = std::max(v, std::abs(c(i, j) - 1.0));
    }
    return v;
}

ThetaResult theta_k_sdp(const Graph& g, int k, ThetaVariant variant,
                        const SolverConfig& cfg) {
    cfg.validate();
    int n = g.order();
    if (k < 1 || k > n) throw std::invalid_argument("theta_k_sdp: k out of range");
    if (n > cfg.size_cap)
        throw std::invalid_argument("theta_k_sdp: graph exceeds the size cap");

    Edges edges = g.edges();
    double rho = cfg.rho;
    double kk = static_cast<double>(k);

    Matrix z = Matrix::Identity(n, n) * (kk / n);  // feasible for every block
    ThetaResult res;
    res.k = k;
    res.variant = variant;
    res.method = ThetaMethod::sdp_splitting;
    res.bound_sense = BoundSense::lower_certified;

    bool prime = variant == ThetaVariant::theta_prime;
    double primal = 0.0, dual = 0.0;
    bool converged = false;
    int iter = 0;

    if (!prime) {
        // two blocks: (objective + affine set) and spectral box
        Matrix u = Matrix::Zero(n, n);
        for (iter = 1; iter <= cfg.max_iterations; ++iter) {
            Matrix y = z - u;
            y.array() += 1.0 / rho;  // prox of -<J, Y>
            project_affine(y, edges, kk);
            Matrix zn = project_box(y + u);
            u += y - zn;
            primal = (y - zn).norm();
            dual = rho * (zn - z).norm();
            z = std::move(zn);
            double scale = std::max(1.0, z.norm());
            if ((primal + dual) / scale < cfg.stop_tol) {
                converged = true;
                break;
            }
            if (cfg.adaptive_rho && iter % 64 == 0) {
                if (primal > 10.0 * dual) {
                    rho *= 2.0;
                    u *= 0.5;
                } else if (dual > 10.0 * primal) {
                    rho *= 0.5;
                    u *= 2.0;
                }
            }
        }
    } else {
        // three-block consensus: affine+objective, spectral box, nonnegative
        Matrix u1 = Matrix::Zero(n, n), u2 = u1, u3 = u1;
        for (iter = 1; iter <= cfg.max_iterations; ++iter) {
            Matrix y1 = z - u1;
            y1.array() += 1.0 / rho;
            project_affine(y1, edges, kk);
            Matrix y2 = project_box(z - u2);
            Matrix y3 = (z - u3).cwiseMax(0.0);
            Matrix zn = ((y1 + u1) + (y2 + u2) + (y3 + u3)) / 3.0;
            u1 += y1 - zn;
            u2 += y2 - zn;
            u3 += y3 - zn;
            primal = std::sqrt((y1 - zn).squaredNorm() + (y2 - zn).squaredNorm() +
                               (y3 - zn).squaredNorm());
            dual = rho * std::sqrt(3.0) * (zn - z).norm();
            z = std::move(zn);
            double scale = std::max(1.0, z.norm());
            if ((primal + dual) / scale < cfg.stop_tol) {
                converged = true;
                break;
            }
            if (cfg.adaptive_rho && iter % 64 == 0) {
                if (primal > 10.0 * dual) {
                    rho *= 2.0;
                    u1 *= 0.5;
                    u2 *= 0.5;
                    u3 *= 0.5;
                } else if (dual > 10.0 * primal) {
                    rho *= 0.5;
                    u1 *= 2.0;
                    u2 *= 2.0;
                    u3 *= 2.0;
                }
            }
        }
    }

    res.iterations = std::min(iter, cfg.max_iterations);
    res.converged = converged;
    res.primal_residual = primal;
    res.feasibility_residual = polish_to_feasibility(z, edges, kk, prime);
    res.value = z.sum();  // <J, Y> of the feasible certificate
    res.certificate = std::move(z);
    return res;
}

ThetaResult theta_k_eig_upper(const Graph& g, int k, const SolverConfig& cfg) {
    cfg.validate();
    int n = g.order();
    if (k < 1 || k > n)
        throw std::invalid_argument("theta_k_eig_upper: k out of range");

    Edges edges = g.edges();
    ThetaResult res;
    res.k = k;
    res.method = ThetaMethod::eig_subgradient;
    res.bound_sense = BoundSense::upper_certified;

    Matrix a = Matrix::Ones(n, n);
    if (edges.empty() || k == n) {
        // no free entries / top-n sum is the pinned trace: J is optimal
        res.value = topk_sum(spectrum_of(a), k);
        res.certificate = std::move(a);
        return res;
    }

    double best = std::numeric_limits<double>::infinity();
    Matrix best_a = a;
    for (int t = 1; t <= cfg.max_iterations; ++t) {
        EigenDecomposition ed = eigen_decompose(a);
        double f = topk_sum(ed.spectrum, k);
        if (f < best) {
            best = f;
            best_a = a;
        }
        // Subgradient of the top-k eigenvalue sum. Near-ties between
        // lambda_k and lambda_k+1 keep the deterministic first k columns;
        // any member of the subdifferential drives the descent.
        Matrix p = ed.vectors.leftCols(k) * ed.vectors.leftCols(k).transpose();
        double step = cfg.subgradient_c / std::sqrt(static_cast<double>(t));
        for (auto [i, j] : edges) {
            a(i, j) -= step * 2.0 * p(i, j);
            a(j, i) = a(i, j);
        }
        res.iterations = t;
    }
    res.value = topk_sum(spectrum_of(best_a), k);
    res.certificate = std::move(best_a);
    return res;
}

ThetaResult theta_k_symmetric(const Graph& g, int k, const SolverConfig& cfg) {
    cfg.validate();
    int n = g.order();
    if (k < 1 || k > n)
        throw std::invalid_argument("theta_k_symmetric: k out of range");
    if (!g.edge_transitive())
        throw std::invalid_argument(
            "theta_k_symmetric requires an edge-transitive graph "
            "(otherwise the 1-D value is only an upper bound)");
    if (!g.regular_degree())
        throw std::invalid_argument("theta_k_symmetric requires a regular graph");

    ThetaResult res;
    res.k = k;
    res.method = ThetaMethod::symmetric_1d;
    res.bound_sense = BoundSense::upper_certified;

    Matrix adj = adjacency_matrix(g);
    if (g.edge_count() == 0) {
        res.value = static_cast<double>(n);
        res.optimal_x = 0.0;
        res.analytic_bound = n;
        res.certificate = Matrix::Ones(n, n);
        return res;
    }

    Spectrum base = spectrum_of(adj);
    double lam1 = base.largest(), lamn = base.smallest();
    auto f = [&](double x) { return topk_sum(j_plus_xa_spectrum(base, x), k); };

    double left = 3.0 * k * n / (lamn - lam1);  // negative
    double fl = f(left);
    for (int i = 0; i < 80; ++i) {
        double wider = 2.0 * left;
        double fw = f(wider);
        if (fw >= fl) break;
        left = wider;
        fl = fw;
    }
    GoldenResult opt = golden_section(f, left, 1.0, cfg.golden_tol);

    double tail = 0.0;
    for (int i = 0; i <= k - 2; ++i) tail += base.values[n - 1 - i];
    res.analytic_bound = n + n * (lam1 + tail) / (lamn - lam1);

    res.value = opt.fx;
    res.optimal_x = opt.x;
    res.certificate = Matrix::Ones(n, n) + opt.x * adj;
    return res;
}

}  // namespace thetak
