#pragma once

#include <optional>

#include "thetak/graph.hpp"
#include "thetak/spectral.hpp"

namespace thetak {

enum class ThetaVariant { theta, theta_prime };
enum class ThetaMethod { sdp_splitting, eig_subgradient, symmetric_1d, closed_form };
enum class BoundSense { lower_certified, upper_certified, converged_estimate };

std::string variant_name(ThetaVariant v);
std::string method_name(ThetaMethod m);

struct SolverConfig {
    int max_iterations = 20000;
    double rho = 1.0;            // splitting penalty, rescaled adaptively
    bool adaptive_rho = true;
    double stop_tol = 1e-6;      // combined relative residual
    double subgradient_c = 1.0;  // step schedule c / sqrt(t)
    double golden_tol = 1e-9;    // x tolerance of the 1-D minimization
    int size_cap = 512;          // largest order accepted by the SDP solver

    void validate() const;
};

struct ThetaResult {
    double value = 0.0;
    int k = 1;
    ThetaVariant variant = ThetaVariant::theta;
    ThetaMethod method = ThetaMethod::sdp_splitting;
    BoundSense bound_sense = BoundSense::converged_estimate;

    // Feasible Y for the SDP route, a matrix of the eigenvalue-form feasible
    // set for the subgradient/1-D routes, absent for closed forms.
    std::optional<Matrix> certificate;
    std::optional<double> optimal_x;  // minimizer of the 1-D path
    double analytic_bound = 0.0;      // closed-form bound reported by the 1-D path

    int iterations = 0;
    double primal_residual = 0.0;
    double feasibility_residual = 0.0;
    bool converged = true;
};

/// Certificate feasibility slacks (worst violation) for a ThetaResult.
/// Zero for results without certificates.
double certificate_violation(const Graph& g, const ThetaResult& r);

/// theta_k (or theta'_k) by two-operator splitting on the maximization SDP
/// over {Y : Y_ij = 0 on edges, tr Y = k, 0 <= Y <= I}; theta' adds the
/// entrywise nonnegative orthant as a third consensus block. The returned
/// value is the objective of a re-projected, feasible certificate, hence a
/// lower bound up to the 1e-8 feasibility slack.
ThetaResult theta_k_sdp(const Graph& g, int k,
                        ThetaVariant variant = ThetaVariant::theta,
                        const SolverConfig& cfg = {});

/// Upper bound on theta_k by projected subgradient descent over the
/// eigenvalue formulation: entries are pinned to 1 on non-edges and the
/// diagonal, free on edges, starting from the all-ones matrix. Every iterate
/// is feasible, so the best objective seen is a certified upper bound.
ThetaResult theta_k_eig_upper(const Graph& g, int k, const SolverConfig& cfg = {});

/// Exact theta_k for regular edge-transitive graphs: golden-section
/// minimization of the top-k eigenvalue sum of J + x*A over x. Refuses graphs
/// not flagged edge-transitive, where the value would only be an upper bound.
ThetaResult theta_k_symmetric(const Graph& g, int k, const SolverConfig& cfg = {});

}  // namespace thetak
