// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "thetak/corpus.hpp"
#include "thetak/report.hpp"
#include "thetak/spectral.hpp"

using namespace thetak;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Criterion> results;

template <typename F>
void criterion(int id, const std::string& label, F&& body) {
    Criterion c{id, label};
    auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", id,
                label.c_str(), c.seconds, c.detail.empty() ? "" : " -- ",
                c.detail.c_str());
    std::fflush(stdout);
    results.push_back(std::move(c));
}

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.ok = false;
        if (!c.detail.empty()) c.detail += "; ";
        c.detail += what;
    }
}

void expect_near(Criterion& c, double value, double target, double tol,
                 const std::string& what) {
    expect(c, std::abs(value - target) <= tol,
           what + ": " + format_value(value) + " vs " + format_value(target));
}

int count_fails(const std::vector<CheckResult>& checks, std::string& first) {
    int fails = 0;
    for (const auto& chk : checks)
        if (chk.status == CheckStatus::fail) {
            if (fails == 0) first = chk.id + " (" + chk.detail + ")";
            ++fails;
        }
    return fails;
}

void expect_suite(Criterion& c, const std::string& name, const std::string& corpus = {}) {
    SuiteConfig cfg;
    cfg.name = name;
    cfg.corpus = corpus;
    BoundReport rep = run_suite(cfg);
    std::string first;
    int fails = count_fails(rep.checks, first);
    expect(c, fails == 0,
           name + ": " + std::to_string(fails) + " failed checks, first " + first);
}

}  // namespace

int main() {
    auto total_start = Clock::now();
    SolverConfig cfg;

    criterion(1, "complete graphs: theta_k(K_n) = k at 1e-4, under 1s each", [&](Criterion& c) {
        for (int n = 3; n <= 8; ++n) {
            Graph g = generate(FamilySpec::complete(n));
            for (int k = 1; k <= n; ++k) {
                auto start = Clock::now();
                double value = theta_k_sdp(g, k, ThetaVariant::theta, cfg).value;
                double secs = std::chrono::duration<double>(Clock::now() - start).count();
                expect_near(c, value, k, 1e-4,
                            "K_" + std::to_string(n) + " k=" + std::to_string(k));
                expect(c, secs < 1.0,
                       "K_" + std::to_string(n) + " k=" + std::to_string(k) + " took " +
                           format_value(secs) + "s");
            }
        }
    });

    criterion(2, "odd cycles: theta_2 closed forms match the sdp", [&](Criterion& c) {
        double c5 = theta_k_sdp(generate("cycle:5"), 2, ThetaVariant::theta, cfg).value;
        expect_near(c, c5, 2.0 * std::sqrt(5.0), 1e-3, "theta_2(C_5)");
        double c7_formula = 2.0 * odd_cycle_theta(7);
        double c7 = theta_k_sdp(generate("cycle:7"), 2, ThetaVariant::theta, cfg).value;
        expect_near(c, c7, c7_formula, 1e-3, "theta_2(C_7)");
        double c5k3 = theta_k_sdp(generate("cycle:5"), 3, ThetaVariant::theta, cfg).value;
        expect_near(c, c5k3, 5.0, 1e-3, "theta_3(C_5)");
    });

    criterion(3, "petersen: three methods agree and K_2 box product matches", [&](Criterion& c) {
        Graph petersen = generate("kneser:5,2");
        double expected[] = {4.0, 8.0, 10.0};
        for (int k = 1; k <= 3; ++k) {
            auto formula = theta_k_formula(*petersen.spec(), k, cfg);
            expect(c, formula.has_value(), "formula window k=" + std::to_string(k));
            if (formula)
                expect_near(c, formula->value, expected[k - 1], 2e-3,
                            "formula k=" + std::to_string(k));
            expect_near(c, theta_k_symmetric(petersen, k, cfg).value, expected[k - 1],
                        2e-3, "symmetric k=" + std::to_string(k));
            expect_near(c, theta_k_sdp(petersen, k, ThetaVariant::theta, cfg).value,
                        expected[k - 1], 2e-3, "sdp k=" + std::to_string(k));
        }
        Graph prod = product(ProductKind::cartesian, generate("complete:2"), petersen);
        expect_near(c, theta_k_sdp(prod, 1, ThetaVariant::theta, cfg).value, 8.0, 2e-3,
                    "theta(K_2 box petersen)");
    });

    criterion(4, "kneser saturation: theta_3(K(6,2)) = 15", [&](Criterion& c) {
        auto formula = theta_k_formula(FamilySpec::kneser(6, 2), 3, cfg);
        expect(c, formula && std::abs(formula->value - 15.0) < 1e-12, "formula");
        double sdp = theta_k_sdp(generate("kneser:6,2"), 3, ThetaVariant::theta, cfg).value;
        expect_near(c, sdp, 15.0, 2e-3, "sdp");
    });

    criterion(5, "gname: penultimate formula and the cartesian gap", [&](Criterion& c) {
        for (int n = 5; n <= 9; ++n) {
            auto formula = theta_k_formula(FamilySpec::gname(n), n - 2, cfg);
            expect(c, formula.has_value(), "formula window n=" + std::to_string(n));
            double sdp =
                theta_k_sdp(generate(FamilySpec::gname(n)), n - 2, ThetaVariant::theta, cfg)
                    .value;
            expect_near(c, sdp, formula->value, 2e-3, "gname n=" + std::to_string(n));
        }
        for (int n : {8, 10}) {
            int k = n / 2;
            Graph g = generate(FamilySpec::gname(n));
            double direct = theta_k_sdp(g, k, ThetaVariant::theta, cfg).value;
            Graph prod =
                product(ProductKind::cartesian, generate(FamilySpec::complete(k)), g);
            double cart = theta_k_sdp(prod, 1, ThetaVariant::theta, cfg).value;
            double bound = std::sqrt(static_cast<double>(n - 2)) - 1.0;
            expect(c, direct - cart >= bound - 5e-3,
                   "gap n=" + std::to_string(n) + ": " + format_value(direct - cart) +
                       " >= " + format_value(bound));
        }
    });

    // one corpus pass serves criteria 6 and 7
    SequenceLawChecks laws;

    criterion(6, "sandwich on every connected graph with at most 7 vertices",
              [&](Criterion& c) {
                  laws = evaluate_sequence_laws(7, 3, cfg, OracleLimits{}, 0);
                  c.detail = std::to_string(laws.sandwich.size()) + " checks";
                  std::string first;
                  int fails = count_fails(laws.sandwich, first);
                  expect(c, fails == 0,
                         std::to_string(fails) + " failures, first " + first);
              });

    criterion(7, "sequence laws: monotone theta_k, nonincreasing increments",
              [&](Criterion& c) {
                  c.detail = std::to_string(laws.monotone.size()) + " checks";
                  std::string first;
                  int fails = count_fails(laws.monotone, first);
                  expect(c, fails == 0,
                         std::to_string(fails) + " failures, first " + first);
              });

    criterion(8, "stahl's multichromatic formula for odd cycles", [&](Criterion& c) {
        for (int half : {2, 3})
            for (int k = 1; k <= 3; ++k) {
                Graph cyc = generate(FamilySpec::cycle(2 * half + 1));
                int chik = exact_chi_k(cyc, k).value;
                int expectv = 2 * k + 1 + (k - 1) / half;
                expect(c, chik == expectv,
                       "C_" + std::to_string(2 * half + 1) + " k=" + std::to_string(k) +
                           ": " + std::to_string(chik) + " vs " + std::to_string(expectv));
            }
        expect(c, exact_chi_k(generate("cycle:5"), 2).value == 5, "chi_2(C_5) = 5");
    });

    criterion(9, "nordhaus bounds on all graphs with at most 6 vertices",
              [&](Criterion& c) { expect_suite(c, "nordhaus"); });

    criterion(10, "hamming: chromatic values, bipartite cases, odd-hole witness",
              [&](Criterion& c) { expect_suite(c, "hamming"); });

    criterion(11, "orthogonality: exact stable-set bounds and omega_8 sdp",
              [&](Criterion& c) {
                  // 4 * (C(15,0) + C(15,1) + C(15,2) + C(15,3)) = 4 * 576
                  expect(c, orth_alpha_lb(16).value == 2304u, "alpha_lb(16)");
                  expect(c, orth_alpha_lb(24).value == 178208u, "alpha_lb(24)");
                  auto formula = theta_k_formula(FamilySpec::orthogonality(8), 1, cfg);
                  expect(c, formula && formula->value == 32.0, "omega_8 formula = 32");
                  SolverConfig fast = cfg;
                  fast.stop_tol = 2e-5;
                  auto start = Clock::now();
                  double sdp =
                      theta_k_sdp(generate("orthogonality:8"), 1, ThetaVariant::theta, fast)
                          .value;
                  double secs =
                      std::chrono::duration<double>(Clock::now() - start).count();
                  expect_near(c, sdp, 32.0, 1e-2, "omega_8 sdp");
                  expect(c, secs < 60.0, "omega_8 sdp took " + format_value(secs) + "s");
                  if (c.ok) c.detail = "omega_8 solve " + format_value(secs) + "s";
              });

    criterion(12, "srg reduced programs: analytic optimum, equivalence, grid",
              [&](Criterion& c) { expect_suite(c, "srg"); });

    criterion(13, "two-sided bracket: subgradient upper minus sdp lower <= 2e-2",
              [&](Criterion& c) {
                  std::vector<std::string> corpus = {
                      "complete:3",     "complete:4",  "complete:6",
                      "cycle:4",        "cycle:5",     "cycle:7",
                      "cycle:9",        "cycle:12",    "kneser:5,2",
                      "johnson:5,2,1",  "multipartite:3,2,1", "multipartite:4,1",
                      "circulant:8,{1,2}", "circulant:9,{1,2}", "gname:6",
                      "gname:9",        "hamming:3,2,{1}",     "hamming:2,3,{1}"};
                  double worst = 0.0;
                  std::string worst_id;
                  for (const auto& spec : corpus) {
                      Graph g = generate(spec);
                      if (g.order() > 12) continue;
                      for (int k = 1; k <= 3 && k <= g.order(); ++k) {
                          double upper = theta_k_eig_upper(g, k, cfg).value;
                          double lower =
                              theta_k_sdp(g, k, ThetaVariant::theta, cfg).value;
                          double gap = upper - lower;
                          if (gap > worst) {
                              worst = gap;
                              worst_id = spec + " k=" + std::to_string(k);
                          }
                          expect(c, gap <= 2e-2,
                                 spec + " k=" + std::to_string(k) + " gap " +
                                     format_value(gap));
                          // the sdp certificate carries a 5e-9 feasibility
                          // slack, so the bracket may invert by that order
                          expect(c, gap >= -1e-6,
                                 spec + " k=" + std::to_string(k) +
                                     " bracket inverted: " + format_value(gap));
                      }
                  }
                  if (c.ok)
                      c.detail = "worst gap " + format_value(worst) + " at " + worst_id;
              });

    criterion(14, "strong-product bracket and disjunction bound",
              [&](Criterion& c) { expect_suite(c, "products"); });

    double total = std::chrono::duration<double>(Clock::now() - total_start).count();
    int failures = 0;
    for (const auto& c : results)
        if (!c.ok) ++failures;
    std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(results.size()) - failures,
                results.size(), total);
    return failures == 0 ? 0 : 1;
}
