#pragma once

#include <string>

#include "thetak/closed_forms.hpp"
#include "thetak/graph.hpp"
#include "thetak/theta_solver.hpp"

namespace thetak {

/// A theta value together with how it was obtained.
struct ThetaEstimate {
    double value = 0.0;
    ThetaMethod method = ThetaMethod::sdp_splitting;
    std::string detail;  // formula id or solver diagnostics
};

/// Method selection: closed form, then the symmetric 1-D fast path, then the
/// splitting SDP. theta' always solves the SDP except where a family formula
/// pins theta' = theta (strongly regular graphs).
ThetaEstimate theta_value(const Graph& g, int k,
                          ThetaVariant variant = ThetaVariant::theta,
                          const SolverConfig& cfg = {});

/// Smallest k with theta_k(g) >= n - 1e-3. The scan ascends from k = 1;
/// monotonicity of the sequence makes the early exit sound.
int psi_theta_k(const Graph& g, const SolverConfig& cfg = {});

}  // namespace thetak
