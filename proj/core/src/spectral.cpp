#include "thetak/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thetak {

namespace {

double grouping_tolerance(const std::vector<double>& values) {
    double top = values.empty() ? 0.0 : std::abs(values.front());
    return 1e-7 * std::max(1.0, top);
}

void require_symmetric(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix is not square");
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("matrix is not symmetric");
}

}  // namespace

std::vector<std::pair<double, int>> Spectrum::multiplicities() const {
    std::vector<std::pair<double, int>> out;
    for (double v : values) {
        if (!out.empty() && std::abs(out.back().first - v) <= group_tol)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

EigenDecomposition eigen_decompose(const Matrix& m) {
    require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(
        (m + m.transpose()) * 0.5, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");

    const auto n = m.rows();
    EigenDecomposition out;
    out.spectrum.values.resize(n);
    out.vectors.resize(n, n);
    // Eigen returns ascending order; reverse and fix signs.
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index src = n - 1 - c;
        out.spectrum.values[c] = solver.eigenvalues()(src);
        Eigen::VectorXd v = solver.eigenvectors().col(src);
        double peak = v.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(v(i)) > 1e-12 * std::max(1.0, peak)) {
                if (v(i) < 0) v = -v;
                break;
            }
        }
        out.vectors.col(c) = v;
    }
    out.spectrum.group_tol = grouping_tolerance(out.spectrum.values);
    return out;
}

Spectrum spectrum_of(const Matrix& m) {
    require_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.transpose()) * 0.5,
                                                 Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigendecomposition failed to converge");
    Spectrum s;
    const auto n = m.rows();
    s.values.resize(n);
    for (Eigen::Index c = 0; c < n; ++c) s.values[c] = solver.eigenvalues()(n - 1 - c);
    s.group_tol = grouping_tolerance(s.values);
    return s;
}

double topk_sum(const Spectrum& s, int k) {
    if (k < 1 || k > s.size())
        throw std::invalid_argument("topk_sum: k out of range");
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += s.values[i];
    return sum;
}

Matrix adjacency_matrix(const Graph& g) {
    int n = g.order();
    Matrix a = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) a(i, j) = a(j, i) = 1.0;
    return a;
}

Matrix laplacian_matrix(const Graph& g) {
    int n = g.order();
    Matrix l = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = g.degree(i);
        for (int j = 0; j < n; ++j)
            if (j != i && g.adjacent(i, j)) l(i, j) = -1.0;
    }
    return l;
}

Spectrum j_plus_xa_spectrum(const Spectrum& adjacency_spectrum, double x) {
    int n = adjacency_spectrum.size();
    Spectrum s;
    s.values.reserve(n);
    s.values.push_back(n + x * adjacency_spectrum.values[0]);
    for (int i = 1; i < n; ++i) s.values.push_back(x * adjacency_spectrum.values[i]);
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    s.group_tol = grouping_tolerance(s.values);
    return s;
}

Spectrum j_plus_xa_spectrum(const Graph& g, double x) {
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d)
            throw std::invalid_argument("j_plus_xa_spectrum requires a regular graph");
    return j_plus_xa_spectrum(spectrum_of(adjacency_matrix(g)), x);
}

Spectrum block_form_spectrum(const Matrix& a, const Matrix& b, int k) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("block_form_spectrum: dimension mismatch");
    if (k < 1) throw std::invalid_argument("block_form_spectrum: k >= 1 required");
    Spectrum sum = spectrum_of(a + (k - 1) * b);
    Spectrum s;
    s.values = sum.values;
    if (k > 1) {
        Spectrum diff = spectrum_of(a - b);
        for (int copy = 0; copy < k - 1; ++copy)
            s.values.insert(s.values.end(), diff.values.begin(), diff.values.end());
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    s.group_tol = grouping_tolerance(s.values);
    return s;
}

}  // namespace thetak
