#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "thetak/closed_forms.hpp"
#include "thetak/oracles.hpp"
#include "thetak/theta_solver.hpp"

using namespace thetak;

TEST_CASE("family formula values") {
    auto v = [](const char* spec, int k) {
        auto r = theta_k_formula(FamilySpec::parse(spec), k);
        REQUIRE_MESSAGE(r, spec);
        return r->value;
    };
    CHECK(v("kneser:5,2", 2) == doctest::Approx(8.0));
    CHECK(v("kneser:6,2", 3) == doctest::Approx(15.0));
    CHECK(v("multipartite:3,2,1", 2) == doctest::Approx(5.0));
    CHECK(v("gname:5", 3) == doctest::Approx(3.0 + std::sqrt(3.0)));
    CHECK(v("johnson:5,2,1", 1) == doctest::Approx(2.5));
    CHECK(v("orthogonality:8", 2) == doctest::Approx(64.0));
    CHECK(v("complete:7", 4) == doctest::Approx(4.0));
    CHECK(v("paley:13", 1) == doctest::Approx(std::sqrt(13.0)));

    double c7 = odd_cycle_theta(7);
    CHECK(v("cycle:7", 2) == doctest::Approx(2.0 * c7));
    CHECK(v("cycle:7", 3) == doctest::Approx(7.0));  // saturated at k = chi
    CHECK(v("cycle:4", 1) == doctest::Approx(2.0));
}

TEST_CASE("formula windows") {
    // gname only covers k = n-2
    CHECK_FALSE(theta_k_formula(FamilySpec::gname(8), 3));
    CHECK(theta_k_formula(FamilySpec::gname(8), 6));
    // n <= 4 johnson graphs go to the solver
    CHECK_FALSE(theta_k_formula(FamilySpec::johnson(4, 2, 1), 1));
    // disconnected circulant has no scaled formula
    CHECK_FALSE(theta_k_formula(FamilySpec::circulant(8, {2, 4}), 1));
    // orthogonality formula stops at k = n
    CHECK_FALSE(theta_k_formula(FamilySpec::orthogonality(4), 5));
    CHECK_THROWS_AS(theta_k_formula(FamilySpec::complete(3), 0), std::invalid_argument);
}

TEST_CASE("johnson consecutive-intersection family") {
    // theta_k(J(n,m,m-1)) = k/(n+1) * C(n+1,m), saturating at k = n-m+1
    auto r = theta_k_formula(FamilySpec::johnson(6, 2, 1), 2);
    REQUIRE(r);
    CHECK(r->value == doctest::Approx(2.0 / 7.0 * 21));  // 6
    auto sat = theta_k_formula(FamilySpec::johnson(5, 2, 1), 5);
    REQUIRE(sat);
    CHECK(sat->value == doctest::Approx(10.0));
    CHECK(sat->formula_id == "johnson-saturated");
}

TEST_CASE("circulant formula anchors on one solve") {
    FamilySpec spec = FamilySpec::circulant(9, {1, 2});
    auto r1 = theta_k_formula(spec, 1);
    auto r2 = theta_k_formula(spec, 2);
    REQUIRE(r1);
    REQUIRE(r2);
    CHECK(r2->value == doctest::Approx(std::min(2.0 * r1->value, 9.0)).epsilon(1e-9));
    double direct = theta_k_sdp(generate(spec), 2).value;
    CHECK(r2->value == doctest::Approx(direct).epsilon(2e-3));
}

TEST_CASE("formula agrees with the sdp across families") {
    for (const char* spec : {"kneser:5,2", "cycle:9", "multipartite:4,1",
                             "johnson:6,2,1", "paley:13", "orthogonality:4"}) {
        FamilySpec fs = FamilySpec::parse(spec);
        Graph g = generate(fs);
        for (int k = 1; k <= 3; ++k) {
            auto formula = theta_k_formula(fs, k);
            if (!formula) continue;
            double sdp = theta_k_sdp(g, k).value;
            CAPTURE(spec);
            CAPTURE(k);
            CHECK(std::abs(formula->value - sdp) <= 2e-3);
        }
    }
}

TEST_CASE("delta ratio on stars K_{n,1}") {
    for (int n : {4, 8, 16}) {
        auto t1 = theta_k_formula(FamilySpec::multipartite({n, 1}), 1);
        auto t2 = theta_k_formula(FamilySpec::multipartite({n, 1}), 2);
        REQUIRE(t1);
        REQUIRE(t2);
        double d1 = t1->value;
        double d2 = t2->value - t1->value;
        CHECK(d2 / d1 == doctest::Approx(1.0 / n));
    }
}

TEST_CASE("srg reduced program: analytic optimum") {
    auto petersen = detect_srg(generate("kneser:5,2"));
    REQUIRE(petersen);

    SrgReducedSolution s = srg_theta3(*petersen, 2);
    CHECK(s.objective == doctest::Approx(8.0));
    CHECK(s.y1 == doctest::Approx(0.8));
    CHECK(s.y2 == doctest::Approx(0.4));
    CHECK(s.min_slack() >= -1e-9);

    SrgReducedSolution capped = srg_theta3(*petersen, 5);
    CHECK(capped.objective == doctest::Approx(10.0));
    CHECK(capped.y1 == doctest::Approx(1.0));
    CHECK(capped.min_slack() >= -1e-9);

    auto c5 = detect_srg(generate("cycle:5"));
    REQUIRE(c5);
    CHECK(srg_theta3(*c5, 1).objective == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("srg reduced program equals the family formula") {
    auto p13 = detect_srg(generate("paley:13"));
    REQUIRE(p13);
    for (int k = 1; k <= 4; ++k) {
        auto formula = theta_k_formula(FamilySpec::paley(13), k);
        REQUIRE(formula);
        CHECK(srg_theta3(*p13, k).objective == doctest::Approx(formula->value));
    }
}

TEST_CASE("cartesian prime program inside its window") {
    auto petersen = detect_srg(generate("kneser:5,2"));
    REQUIRE(petersen);
    CHECK(srg_prime_cart_window(*petersen) == doctest::Approx(2.5));

    SrgReducedSolution s = srg_theta_prime_cart(*petersen, 2);
    CHECK(s.objective == doctest::Approx(8.0));
    CHECK(s.min_slack() >= -1e-9);
    CHECK_THROWS_AS(srg_theta_prime_cart(*petersen, 3), std::invalid_argument);

    auto c5 = detect_srg(generate("cycle:5"));
    REQUIRE(c5);
    SrgReducedSolution t = srg_theta_prime_cart(*c5, 2);
    CHECK(t.objective == doctest::Approx(2.0 * std::sqrt(5.0)));
}

TEST_CASE("program equivalence maps points both ways") {
    // forward: the two-variable optimum lifts to a feasible four-variable
    // point (srg_theta_prime_cart construction); backward: dropping (z1, z2)
    // from that point must land on a feasible two-variable point with the
    // same objective.
    for (const char* spec : {"kneser:5,2", "cycle:5", "paley:13"}) {
        auto p = detect_srg(generate(spec));
        REQUIRE(p);
        int k = 2;
        if (!(k < srg_prime_cart_window(*p))) continue;
        SrgReducedSolution prime = srg_theta_prime_cart(*p, k);
        SrgReducedSolution base = srg_theta3(*p, k);
        CAPTURE(spec);
        CHECK(prime.x1 == doctest::Approx(base.y1).epsilon(1e-12));
        CHECK(prime.x2 == doctest::Approx(base.y2).epsilon(1e-12));
        CHECK(prime.objective == doctest::Approx(base.objective).epsilon(1e-12));
        // the backward direction: (x1, x2) satisfies every two-variable
        // constraint, which srg_theta3 already verified at (y1, y2)
        CHECK(base.min_slack() >= -1e-9);
    }
}

TEST_CASE("inconsistent srg parameters are rejected") {
    SrgParams bogus;
    bogus.n = 10;
    bogus.d = 3;
    bogus.lambda = 1;  // petersen has lambda = 0
    bogus.mu = 1;
    bogus.r = 1.0;
    bogus.s = -2.0;
    CHECK_THROWS_AS(srg_theta3(bogus, 2), std::invalid_argument);
    SrgParams complete_like;
    complete_like.n = 5;
    complete_like.d = 4;
    complete_like.r = 0.0;
    complete_like.s = -2.0;
    CHECK_THROWS_AS(srg_theta3(complete_like, 1), std::invalid_argument);
}

TEST_CASE("grid search brackets the analytic optimum") {
    for (const char* spec : {"kneser:5,2", "cycle:5"}) {
        auto p = detect_srg(generate(spec));
        REQUIRE(p);
        SrgReducedSolution s = srg_theta3(*p, 2);
        double grid = srg_matr_grid_max(*p, 2);
        CAPTURE(spec);
        CHECK(grid <= s.objective + 5e-3);
        CHECK(grid >= s.objective - 5e-3 * p->n);
    }
}

namespace {

// independent reference: Pascal-row accumulation in 128-bit arithmetic
unsigned long long pascal_alpha_lb(int n) {
    unsigned __int128 total = 0, coeff = 1;
    for (int i = 0; i <= n / 4 - 1; ++i) {
        if (i > 0) coeff = coeff * (n - i) / i;
        total += coeff;
    }
    return static_cast<unsigned long long>(4 * total);
}

}  // namespace

TEST_CASE("orthogonality stable-set bound") {
    CHECK(orth_alpha_lb(4).value == 4);
    CHECK(orth_alpha_lb(16).value == 2304);
    CHECK(orth_alpha_lb(24).value == 178208);
    CHECK(orth_alpha_lb(24).decimal == "178208");
    for (int n : {4, 8, 12, 16, 20, 24, 28, 32, 48, 64})
        CHECK(orth_alpha_lb(n).value == pascal_alpha_lb(n));
    CHECK_THROWS_AS(orth_alpha_lb(10), std::invalid_argument);
    // large inputs stay exact through the big-integer path
    CHECK(orth_alpha_lb(96).decimal.size() > 19);
}

TEST_CASE("chi_k bounds") {
    SUBCASE("petersen k = 2") {
        Graph g = generate("kneser:5,2");
        ExactValues exact;
        exact.omega = 2;
        exact.alpha = 4;
        exact.chi = 3;
        BoundPair b = chi_k_bounds(g, 2, exact);
        CHECK(b.lower.value == doctest::Approx(5.0));
        CHECK(b.upper.value == doctest::Approx(6.0));
        CHECK(b.upper.source == "chromatic-multiple");
    }
    SUBCASE("weakly perfect collapse") {
        Graph g = generate("complete:5");
        ExactValues exact;
        exact.omega = 5;
        exact.chi = 5;
        BoundPair b = chi_k_bounds(g, 3, exact);
        CHECK(b.lower.value == doctest::Approx(15.0));
        CHECK(b.upper.value == doctest::Approx(15.0));
    }
    SUBCASE("binary odd-distance collapse") {
        BoundPair b = chi_k_bounds(generate(FamilySpec::hamming(3, 2, {3})), 2);
        CHECK(b.lower.value == doctest::Approx(4.0));
        CHECK(b.upper.value == doctest::Approx(4.0));
    }
    SUBCASE("triangular graph bracket") {
        BoundPair b = chi_k_bounds(generate("johnson:5,2,1"), 1);
        CHECK(b.lower.value == doctest::Approx(4.0));
        CHECK(b.upper.value == doctest::Approx(5.0));
    }
    SUBCASE("edgeless") {
        BoundPair b = chi_k_bounds(Graph::from_edges(4, {}), 3);
        CHECK(b.lower.value == doctest::Approx(3.0));
        CHECK(b.upper.value == doctest::Approx(3.0));
        CHECK(b.lower.source == "edgeless");
    }
    SUBCASE("complete graphs attain the spectral bounds") {
        // without any oracle input the adjacency-ratio lower bound and the
        // greedy-degree upper bound both land on k*n exactly
        for (int n : {4, 5, 7}) {
            BoundPair b = chi_k_bounds(generate(FamilySpec::complete(n)), 2);
            CAPTURE(n);
            CHECK(b.lower.value == doctest::Approx(2.0 * n).epsilon(1e-10));
            CHECK(b.upper.value == doctest::Approx(2.0 * n).epsilon(1e-10));
        }
    }
    SUBCASE("hamming tail") {
        // H(2,4,{1,2}): q = 4 >= n - f + 2 = 3, so chi_k = k * q^(n-f+1) = 16k
        Graph g = generate(FamilySpec::hamming(2, 4, {1, 2}));
        BoundPair b = chi_k_bounds(g, 1);
        CHECK(b.lower.value == doctest::Approx(16.0));
        CHECK(b.upper.value == doctest::Approx(16.0));
        CHECK(b.lower.source == "hamming-tail");
    }
}

TEST_CASE("chi_k bounds bracket the exact value on the corpus") {
    for (const char* spec :
         {"cycle:5", "cycle:6", "kneser:5,2", "gname:5", "multipartite:3,2,1"}) {
        Graph g = generate(spec);
        ExactValues exact;
        exact.omega = exact_clique(g).value;
        exact.alpha = exact_alpha(g).value;
        exact.chi = exact_chromatic(g).value;
        for (int k = 1; k * g.order() <= 24; ++k) {
            BoundPair b = chi_k_bounds(g, k, exact);
            int chik = exact_chi_k(g, k).value;
            CAPTURE(spec);
            CAPTURE(k);
            CHECK(b.lower.value <= chik + 1e-9);
            CHECK(chik <= b.upper.value + 1e-9);
        }
    }
}

TEST_CASE("nordhaus bound values") {
    NordhausBounds one = nordhaus_bounds(9, 1);
    CHECK(one.product_lower == doctest::Approx(9.0));
    CHECK(one.product_upper == doctest::Approx(25.0));
    CHECK(one.sum_lower == doctest::Approx(6.0));
    CHECK(one.sum_upper == doctest::Approx(10.0));

    NordhausBounds two = nordhaus_bounds(5, 2);
    CHECK(two.product_lower == doctest::Approx(20.0));
    CHECK(two.product_upper == doctest::Approx(36.0));
    CHECK(two.sum_lower == doctest::Approx(4.0 * std::sqrt(5.0)));
    CHECK(two.sum_upper == doctest::Approx(12.0));
}

TEST_CASE("nordhaus product upper bound is attained") {
    // K_3 together with two isolated vertices, n = 5, k = 2
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}});
    Graph co = complement(g);
    int a = exact_chi_k(g, 2).value;
    int b = exact_chi_k(co, 2).value;
    CHECK(a * b == 36);
    CHECK(a + b == doctest::Approx(nordhaus_bounds(5, 2).sum_upper));
}
