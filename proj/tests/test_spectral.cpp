#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "thetak/spectral.hpp"

using namespace thetak;

namespace {

Matrix random_symmetric(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
    return m;
}

bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

TEST_CASE("eigen on small fixed matrices") {
    Graph k3 = generate("complete:3");
    Spectrum s = spectrum_of(adjacency_matrix(k3));
    CHECK(s.values[0] == doctest::Approx(2.0));
    CHECK(s.values[1] == doctest::Approx(-1.0));
    CHECK(s.values[2] == doctest::Approx(-1.0));

    Matrix ones = Matrix::Ones(4, 4);
    Spectrum os = spectrum_of(ones);
    CHECK(os.values[0] == doctest::Approx(4.0));
    for (int i = 1; i < 4; ++i) CHECK(os.values[i] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("petersen spectrum is {3, 1 x5, -2 x4}") {
    Spectrum s = spectrum_of(adjacency_matrix(generate("kneser:5,2")));
    auto groups = s.multiplicities();
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].first == doctest::Approx(3.0));
    CHECK(groups[0].second == 1);
    CHECK(groups[1].first == doctest::Approx(1.0));
    CHECK(groups[1].second == 5);
    CHECK(groups[2].first == doctest::Approx(-2.0));
    CHECK(groups[2].second == 4);
}

TEST_CASE("reconstruction and trace properties on random matrices") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 49);
        Matrix m = random_symmetric(n, rng);
        EigenDecomposition ed = eigen_decompose(m);
        Eigen::VectorXd lam(n);
        for (int i = 0; i < n; ++i) lam(i) = ed.spectrum.values[i];
        Matrix rebuilt = ed.vectors * lam.asDiagonal() * ed.vectors.transpose();
        CHECK((m - rebuilt).norm() <= 1e-9 * std::max(1.0, m.norm()));

        double sum = 0;
        for (double v : ed.spectrum.values) sum += v;
        CHECK(sum == doctest::Approx(m.trace()).epsilon(1e-9));
        CHECK(std::is_sorted(ed.spectrum.values.begin(), ed.spectrum.values.end(),
                             std::greater<double>()));
    }
}

TEST_CASE("eigenvector sign convention is deterministic") {
    std::mt19937 rng(99);
    Matrix m = random_symmetric(12, rng);
    EigenDecomposition a = eigen_decompose(m);
    EigenDecomposition b = eigen_decompose(m);
    CHECK((a.vectors - b.vectors).norm() == 0.0);
    for (int c = 0; c < 12; ++c) {
        for (int i = 0; i < 12; ++i) {
            double v = a.vectors(i, c);
            if (std::abs(v) > 1e-9) {
                CHECK(v > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("non-symmetric input is rejected") {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = 1.0;  // no mirrored entry
    CHECK_THROWS_AS(eigen_decompose(m), std::invalid_argument);
}

TEST_CASE("topk_sum") {
    Spectrum s;
    s.values = {3, 1, 1, -2};
    CHECK(topk_sum(s, 2) == doctest::Approx(4.0));
    CHECK(topk_sum(s, 4) == doctest::Approx(3.0));
    CHECK(topk_sum(s, 1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(topk_sum(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(topk_sum(s, 5), std::invalid_argument);
}

TEST_CASE("j_plus_xa examples") {
    Graph c4 = generate("cycle:4");
    Spectrum s = j_plus_xa_spectrum(c4, 1.0);
    CHECK(multiset_close(s.values, {6, 0, 0, -2}, 1e-9));

    Spectrum zero_x = j_plus_xa_spectrum(generate("kneser:5,2"), 0.0);
    CHECK(zero_x.values[0] == doctest::Approx(10.0));
    for (int i = 1; i < 10; ++i) CHECK(zero_x.values[i] == doctest::Approx(0.0));

    // the theta-optimal x for Petersen: top value of the spectrum is 4
    Spectrum pet = j_plus_xa_spectrum(generate("kneser:5,2"), -2.0);
    CHECK(pet.values[0] == doctest::Approx(4.0));
}

TEST_CASE("j_plus_xa equals the direct spectrum on regular graphs") {
    for (const char* spec : {"cycle:5", "cycle:6", "kneser:5,2", "circulant:9,{1,2}",
                             "paley:13", "complete:6"}) {
        Graph g = generate(spec);
        Matrix a = adjacency_matrix(g);
        for (double x : {-3.0, -1.0, 0.0, 1.0}) {
            Spectrum fast = j_plus_xa_spectrum(g, x);
            Spectrum direct = spectrum_of(Matrix::Ones(g.order(), g.order()) + x * a);
            CAPTURE(spec);
            CAPTURE(x);
            CHECK(multiset_close(fast.values, direct.values, 1e-8));
        }
    }
}

TEST_CASE("j_plus_xa refuses irregular graphs") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(j_plus_xa_spectrum(path, 1.0), std::invalid_argument);
}

TEST_CASE("block form spectrum examples") {
    Matrix i2 = Matrix::Identity(2, 2);
    Matrix zero = Matrix::Zero(2, 2);
    Spectrum s = block_form_spectrum(i2, zero, 3);
    REQUIRE(s.size() == 6);
    for (double v : s.values) CHECK(v == doctest::Approx(1.0));

    Matrix ones = Matrix::Ones(2, 2);
    Spectrum t = block_form_spectrum(ones, ones, 2);
    CHECK(multiset_close(t.values, {4, 0, 0, 0}, 1e-9));

    CHECK_THROWS_AS(block_form_spectrum(i2, Matrix::Zero(3, 3), 2),
                    std::invalid_argument);
}

TEST_CASE("block form matches brute-force assembly") {
    std::mt19937 rng(4321);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % 4);
        Matrix a = random_symmetric(n, rng), b = random_symmetric(n, rng);
        Matrix big = Matrix::Zero(n * k, n * k);
        for (int bi = 0; bi < k; ++bi)
            for (int bj = 0; bj < k; ++bj)
                big.block(bi * n, bj * n, n, n) = bi == bj ? a : b;
        CHECK(multiset_close(block_form_spectrum(a, b, k).values,
                             spectrum_of(big).values, 1e-8));
    }
}

TEST_CASE("kronecker eigenvalue law") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_symmetric(3, rng), b = random_symmetric(3, rng);
        Matrix kron = Matrix::Zero(9, 9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                kron.block(3 * i, 3 * j, 3, 3) = a(i, j) * b;
        Spectrum sa = spectrum_of(a), sb = spectrum_of(b);
        std::vector<double> products;
        for (double x : sa.values)
            for (double y : sb.values) products.push_back(x * y);
        CHECK(multiset_close(spectrum_of(kron).values, products, 1e-8));
    }
}

TEST_CASE("laplacian") {
    Matrix l2 = laplacian_matrix(generate("complete:2"));
    CHECK(l2(0, 0) == doctest::Approx(1.0));
    CHECK(l2(0, 1) == doctest::Approx(-1.0));

    Graph edgeless = Graph::from_edges(3, {});
    CHECK(laplacian_matrix(edgeless).norm() == 0.0);

    Spectrum s = spectrum_of(laplacian_matrix(generate("cycle:3")));
    CHECK(s.values[0] == doctest::Approx(3.0));
    CHECK(s.values[1] == doctest::Approx(3.0));
    CHECK(s.values[2] == doctest::Approx(0.0).epsilon(1e-12));
}
