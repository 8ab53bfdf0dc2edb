#pragma once

#include <Eigen/Dense>
#include <vector>

#include "thetak/graph.hpp"

namespace thetak {

using Matrix = Eigen::MatrixXd;

/// Eigenvalues in descending order plus the tolerance used when grouping
/// numerically equal values for multiplicity reporting. Computations never
/// merge eigenvalues; grouping is presentation only.
struct Spectrum {
    std::vector<double> values;  // descending
    double group_tol = 0.0;

    int size() const { return static_cast<int>(values.size()); }
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }

    /// (value, multiplicity) pairs grouped at group_tol.
    std::vector<std::pair<double, int>> multiplicities() const;
};

/// Full decomposition; columns of `vectors` follow the descending eigenvalue
/// order and carry the first-nonzero-entry-positive sign convention.
struct EigenDecomposition {
    Spectrum spectrum;
    Matrix vectors;
};

/// Symmetric eigendecomposition. Throws on non-symmetric input
/// (relative asymmetry above 1e-12).
EigenDecomposition eigen_decompose(const Matrix& m);

/// Eigenvalues only, descending.
Spectrum spectrum_of(const Matrix& m);

/// Sum of the k largest values; k must lie in [1, size].
double topk_sum(const Spectrum& s, int k);

Matrix adjacency_matrix(const Graph& g);

/// Degree diagonal minus adjacency.
Matrix laplacian_matrix(const Graph& g);

/// Spectrum of J + x*A for a regular graph, assembled from the cached
/// adjacency spectrum without forming the matrix:
/// {n + x*lambda_1} together with {x*lambda_i : i >= 2}, re-sorted.
Spectrum j_plus_xa_spectrum(const Spectrum& adjacency_spectrum, double x);

/// Same, computing the adjacency spectrum on the fly. Throws if g is not
/// regular (the all-ones vector must be an eigenvector of A).
Spectrum j_plus_xa_spectrum(const Graph& g, double x);

/// Spectrum of I_k (x) A + (J_k - I_k) (x) B assembled as the union of
/// sigma(A + (k-1)B) and k-1 copies of sigma(A - B); the kn x kn matrix is
/// never materialized.
Spectrum block_form_spectrum(const Matrix& a, const Matrix& b, int k);

}  // namespace thetak
