#include "thetak/methods.hpp"

namespace thetak {

ThetaEstimate theta_value(const Graph& g, int k, ThetaVariant variant,
                          const SolverConfig& cfg) {
    if (variant == ThetaVariant::theta) {
        if (g.spec()) {
            if (auto formula = theta_k_formula(*g.spec(), k, cfg))
                return {formula->value, ThetaMethod::closed_form, formula->formula_id};
        }
        if (g.edge_transitive() && g.regular_degree() && k <= g.order()) {
            ThetaResult r = theta_k_symmetric(g, k, cfg);
            return {r.value, ThetaMethod::symmetric_1d, "golden-section"};
        }
    } else if (g.spec() && g.spec()->family == Family::paley) {
        // theta' = theta for strongly regular graphs
        if (auto formula = theta_k_formula(*g.spec(), k, cfg))
            return {formula->value, ThetaMethod::closed_form, formula->formula_id};
    }
    ThetaResult r = theta_k_sdp(g, k, variant, cfg);
    return {r.value, ThetaMethod::sdp_splitting,
            r.converged ? "converged" : "iteration-limit"};
}

int psi_theta_k(const Graph& g, const SolverConfig& cfg) {
    int n = g.order();
    if (n > cfg.size_cap)
        throw std::invalid_argument("psi_theta_k: graph exceeds the size cap");
    for (int k = 1; k < n; ++k) {
        if (theta_value(g, k, ThetaVariant::theta, cfg).value >= n - 1e-3) return k;
    }
    return n;  // theta_n equals the trace, so the scan always terminates
}

}  // namespace thetak
