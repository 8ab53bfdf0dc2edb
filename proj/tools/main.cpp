#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "thetak/dimacs.hpp"
#include "thetak/report.hpp"

namespace {

using namespace thetak;

// Graph sources: a family spec string or a DIMACS file path.
Graph load_graph(const std::string& source) {
    if (std::filesystem::exists(source)) return load_dimacs_file(source);
    return generate(FamilySpec::parse(source));
}

std::pair<int, int> parse_k_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int k = std::stoi(text);
        return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

void write_or_print(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void print_report(const BoundReport& rep) {
    std::cout << "graph " << rep.graph_id << "  (" << rep.order << " vertices, "
              << rep.edges << " edges)\n";
    if (rep.psi) std::cout << "psi " << *rep.psi << "\n";
    for (const auto& r : rep.rows) {
        std::cout << "  k=" << r.k << "  theta=" << format_value(r.theta.value) << " ["
                  << r.theta.method << "]";
        if (r.theta_prime)
            std::cout << "  theta'=" << format_value(*r.theta_prime);
        if (r.alpha_k)
            std::cout << "  alpha_k=" << format_value(r.alpha_k->value)
                      << (r.alpha_k->exact ? "" : " (bracket)");
        if (r.chi_exact)
            std::cout << "  chi_k=" << *r.chi_exact;
        else if (!r.chi_lower.source.empty())
            std::cout << "  chi_k in [" << format_value(r.chi_lower.value) << ","
                      << format_value(r.chi_upper.value) << "]  ("
                      << r.chi_lower.source << "/" << r.chi_upper.source << ")";
        if (!r.sandwich_ok) std::cout << "  SANDWICH-FAIL";
        std::cout << "\n";
    }
    for (const auto& c : rep.checks)
        std::cout << "  [" << status_name(c.status) << "] " << c.id << "  "
                  << c.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph parameter toolkit: generalized theta numbers, "
                 "multicoloring bounds and verification suites"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph as DIMACS");
    std::string gen_spec, gen_out;
    gen->add_option("spec", gen_spec, "family spec, e.g. kneser:5,2")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // compute
    auto* comp = app.add_subcommand("compute", "parameter table for one graph");
    std::string comp_source, comp_krange = "1..3", comp_json, comp_csv, comp_method;
    comp->add_option("source", comp_source, "family spec or DIMACS file")->required();
    comp->add_option("--k", comp_krange, "k range, e.g. 2 or 1..3");
    comp->add_option("--method", comp_method,
                     "force method: formula|symmetric|sdp (default: auto)");
    comp->add_option("--json", comp_json, "write the report as JSON");
    comp->add_option("--csv", comp_csv, "write the report as CSV");

    // delta
    auto* delta = app.add_subcommand("delta", "theta_k sequence and increments");
    std::string delta_spec;
    int delta_kmax = 0;
    delta->add_option("spec", delta_spec, "family spec or DIMACS file")->required();
    delta->add_option("--kmax", delta_kmax, "largest k")->required();

    // suite
    auto* suite = app.add_subcommand("suite", "run a named verification suite");
    std::string suite_name, suite_corpus, suite_json;
    int suite_workers = 0;
    suite->add_option("name", suite_name, "one of: " + [] {
                          std::string all;
                          for (const auto& s : suite_names()) {
                              if (!all.empty()) all += ", ";
                              all += s;
                          }
                          return all;
                      }())->required();
    suite->add_option("--corpus", suite_corpus, "corpus selector, e.g. n<=6");
    suite->add_option("--workers", suite_workers, "worker threads (0 = auto)");
    suite->add_option("--json", suite_json, "write the aggregate report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Graph g = generate(FamilySpec::parse(gen_spec));
            write_or_print(save_dimacs(g), gen_out);
            return 0;
        }
        if (*comp) {
            Graph g = load_graph(comp_source);
            auto [k_min, k_max] = parse_k_range(comp_krange);
            SolverConfig cfg;
            BoundReport rep;
            if (comp_method.empty()) {
                rep = compute_report(g, k_min, k_max, cfg);
            } else {
                rep.graph_id = g.id();
                rep.spec = g.spec() ? g.spec()->to_string() : "";
                rep.order = g.order();
                rep.edges = g.edge_count();
                for (int k = k_min; k <= k_max; ++k) {
                    BoundRow row;
                    row.k = k;
                    if (comp_method == "formula") {
                        auto f = g.spec() ? theta_k_formula(*g.spec(), k, cfg)
                                          : std::nullopt;
                        if (!f)
                            throw std::runtime_error(
                                "no closed form applies at k=" + std::to_string(k));
                        row.theta = {f->value, "closed-form", f->formula_id};
                    } else if (comp_method == "symmetric") {
                        ThetaResult r = theta_k_symmetric(g, k, cfg);
                        row.theta = {r.value, method_name(r.method), "golden-section"};
                    } else if (comp_method == "sdp") {
                        ThetaResult r = theta_k_sdp(g, k, ThetaVariant::theta, cfg);
                        row.theta = {r.value, method_name(r.method),
                                     r.converged ? "converged" : "iteration-limit"};
                    } else {
                        throw std::runtime_error("unknown method '" + comp_method + "'");
                    }
                    rep.rows.push_back(std::move(row));
                }
            }
            print_report(rep);
            if (!comp_json.empty()) write_or_print(to_json(rep) + "\n", comp_json);
            if (!comp_csv.empty()) write_or_print(to_csv(rep), comp_csv);
            return 0;
        }
        if (*delta) {
            Graph g = load_graph(delta_spec);
            DeltaSequence seq = delta_sequence(g, delta_kmax);
            std::cout << "graph " << seq.graph_id << "\n";
            for (std::size_t i = 0; i < seq.values.size(); ++i)
                std::cout << "  k=" << i + 1 << "  theta=" << format_value(seq.values[i])
                          << "  delta=" << format_value(seq.increments[i]) << "  ["
                          << seq.methods[i] << "]\n";
            bool mono = seq.nondecreasing();
            bool conc = seq.increments_nonincreasing();
            std::cout << "  nondecreasing=" << (mono ? "yes" : "NO")
                      << "  increments-nonincreasing=" << (conc ? "yes" : "NO") << "\n";
            return mono && conc ? 0 : 1;
        }
        if (*suite) {
            SuiteConfig cfg;
            cfg.name = suite_name;
            cfg.corpus = suite_corpus;
            cfg.workers = suite_workers;
            BoundReport rep = run_suite(cfg);
            int pass = 0, fail = 0, findings = 0;
            for (const auto& c : rep.checks) {
                if (c.status == CheckStatus::pass) ++pass;
                if (c.status == CheckStatus::fail) ++fail;
                if (c.status == CheckStatus::finding) ++findings;
                if (c.status != CheckStatus::pass)
                    std::cout << "[" << status_name(c.status) << "] " << c.id << "  "
                              << c.detail << "\n";
            }
            std::cout << "suite " << suite_name << ": " << pass << " pass, " << fail
                      << " fail, " << findings << " findings\n";
            if (!suite_json.empty()) write_or_print(to_json(rep) + "\n", suite_json);
            return fail == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "thetak: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
