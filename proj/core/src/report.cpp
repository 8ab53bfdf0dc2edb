#include "thetak/report.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace thetak {

using nlohmann::json;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::finding: return "finding";
    }
    return "?";
}

bool DeltaSequence::nondecreasing(double tol) const {
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1] - tol) return false;
    return true;
}

bool DeltaSequence::increments_nonincreasing(double tol) const {
    for (std::size_t i = 1; i < increments.size(); ++i)
        if (increments[i] > increments[i - 1] + tol) return false;
    return true;
}

DeltaSequence delta_sequence(const Graph& g, int k_max, const SolverConfig& cfg) {
    if (k_max < 1 || k_max > g.order())
        throw std::invalid_argument("delta_sequence: K must lie in 1..n");
    DeltaSequence seq;
    seq.graph_id = g.id();
    double prev = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        ThetaEstimate est = theta_value(g, k, ThetaVariant::theta, cfg);
        seq.values.push_back(est.value);
        seq.increments.push_back(est.value - prev);
        std::string method = method_name(est.method);
        if (est.detail == "iteration-limit") method += " (iteration-limit)";
        seq.methods.push_back(std::move(method));
        prev = est.value;
    }
    return seq;
}

bool BoundReport::passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    for (const auto& r : rows)
        if (!r.sandwich_ok) return false;
    return true;
}

void SuiteConfig::validate() const {
    if (k_max < 1) throw std::invalid_argument("suite k_max must be positive");
    if (workers < 0) throw std::invalid_argument("suite workers must be >= 0");
    solver.validate();
}

void parallel_for(int jobs, int workers, const std::function<void(int)>& fn) {
    if (jobs <= 0) return;
    if (workers <= 0)
        workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::min(std::max(workers, 1), jobs);
    if (workers == 1) {
        for (int i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

BoundReport compute_report(const Graph& g, int k_min, int k_max,
                           const SolverConfig& cfg, const OracleLimits& limits) {
    if (k_min < 1 || k_max < k_min || k_max > g.order())
        throw std::invalid_argument("compute_report: bad k range");

    BoundReport rep;
    rep.graph_id = g.id();
    rep.spec = g.spec() ? g.spec()->to_string() : "";
    rep.order = g.order();
    rep.edges = g.edge_count();

    int n = g.order();
    bool solver_ok = n <= cfg.size_cap;
    if (n <= cfg.size_cap && n <= 64) rep.psi = psi_theta_k(g, cfg);

    // graph-level oracles shared across rows
    ExactValues exact;
    if (n <= 60) {
        exact.alpha = exact_alpha(g, limits).value;
        exact.omega = exact_clique(g, limits).value;
    }
    if (n <= 30) exact.chi = exact_chromatic(g, limits).value;

    for (int k = k_min; k <= k_max; ++k) {
        BoundRow row;
        row.k = k;

        ThetaEstimate theta = theta_value(g, k, ThetaVariant::theta, cfg);
        row.theta = {theta.value, method_name(theta.method), theta.detail};
        if (solver_ok) {
            ThetaEstimate prime = theta_value(g, k, ThetaVariant::theta_prime, cfg);
            row.theta_prime = prime.value;
        }

        if (static_cast<long long>(n) * k <= 60) {
            OracleResult a = exact_alpha_k(g, k, limits);
            row.alpha_k = AlphaCell{static_cast<double>(a.value), !a.limit_hit};
        }
        if (static_cast<long long>(n) * k <= 30) {
            OracleResult c = exact_chi_k(g, k, limits);
            if (!c.limit_hit) row.chi_exact = c.value;
        }
        BoundPair bounds = chi_k_bounds(g, k, exact);
        row.chi_lower = bounds.lower;
        row.chi_upper = bounds.upper;

        row.sandwich_ok = bounds.lower.value <= bounds.upper.value + 1e-9;
        if (row.alpha_k && row.alpha_k->exact)
            row.sandwich_ok =
                row.sandwich_ok && row.alpha_k->value <= theta.value + 1e-3;
        if (row.theta_prime)
            row.sandwich_ok = row.sandwich_ok && *row.theta_prime <= theta.value + 1e-4;
        if (row.chi_exact)
            row.sandwich_ok = row.sandwich_ok &&
                              bounds.lower.value <= *row.chi_exact + 1e-9 &&
                              *row.chi_exact <= bounds.upper.value + 1e-9;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

json to_json_obj(const CheckResult& c) {
    return json{{"id", c.id},
                {"status", status_name(c.status)},
                {"slack", c.slack},
                {"detail", c.detail}};
}

CheckResult check_from_json(const json& j) {
    CheckResult c;
    c.id = j.at("id").get<std::string>();
    std::string st = j.at("status").get<std::string>();
    c.status = st == "pass"      ? CheckStatus::pass
               : st == "fail"    ? CheckStatus::fail
                                 : CheckStatus::finding;
    c.slack = j.at("slack").get<double>();
    c.detail = j.at("detail").get<std::string>();
    return c;
}

}  // namespace

std::string to_json(const BoundReport& rep) {
    json j;
    j["graph"] = {{"id", rep.graph_id},
                  {"spec", rep.spec},
                  {"order", rep.order},
                  {"edges", rep.edges}};
    if (rep.psi)
        j["psi"] = *rep.psi;
    else
        j["psi"] = nullptr;

    j["rows"] = json::array();
    for (const auto& r : rep.rows) {
        json row;
        row["k"] = r.k;
        if (r.alpha_k)
            row["alpha_k"] = {{"value", r.alpha_k->value}, {"exact", r.alpha_k->exact}};
        else
            row["alpha_k"] = nullptr;
        row["theta"] = {{"value", r.theta.value},
                        {"method", r.theta.method},
                        {"detail", r.theta.detail}};
        if (r.theta_prime)
            row["theta_prime"] = *r.theta_prime;
        else
            row["theta_prime"] = nullptr;
        row["chi"] = {{"lower", {{"value", r.chi_lower.value}, {"source", r.chi_lower.source}}},
                      {"upper", {{"value", r.chi_upper.value}, {"source", r.chi_upper.source}}}};
        if (r.chi_exact)
            row["chi"]["exact"] = *r.chi_exact;
        else
            row["chi"]["exact"] = nullptr;
        row["sandwich_ok"] = r.sandwich_ok;
        j["rows"].push_back(std::move(row));
    }

    j["verdicts"] = json::array();
    j["findings"] = json::array();
    for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::finding)
            j["findings"].push_back(to_json_obj(c));
        else
            j["verdicts"].push_back(to_json_obj(c));
    }
    return j.dump(2);
}

BoundReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    BoundReport rep;
    rep.graph_id = j.at("graph").at("id").get<std::string>();
    rep.spec = j.at("graph").at("spec").get<std::string>();
    rep.order = j.at("graph").at("order").get<int>();
    rep.edges = j.at("graph").at("edges").get<long long>();
    if (!j.at("psi").is_null()) rep.psi = j.at("psi").get<int>();

    for (const auto& row : j.at("rows")) {
        BoundRow r;
        r.k = row.at("k").get<int>();
        if (!row.at("alpha_k").is_null())
            r.alpha_k = AlphaCell{row.at("alpha_k").at("value").get<double>(),
                                  row.at("alpha_k").at("exact").get<bool>()};
        r.theta = {row.at("theta").at("value").get<double>(),
                   row.at("theta").at("method").get<std::string>(),
                   row.at("theta").at("detail").get<std::string>()};
        if (!row.at("theta_prime").is_null())
            r.theta_prime = row.at("theta_prime").get<double>();
        r.chi_lower = {row.at("chi").at("lower").at("value").get<double>(),
                       row.at("chi").at("lower").at("source").get<std::string>()};
        r.chi_upper = {row.at("chi").at("upper").at("value").get<double>(),
                       row.at("chi").at("upper").at("source").get<std::string>()};
        if (!row.at("chi").at("exact").is_null())
            r.chi_exact = row.at("chi").at("exact").get<int>();
        r.sandwich_ok = row.at("sandwich_ok").get<bool>();
        rep.rows.push_back(std::move(r));
    }
    for (const auto& c : j.at("verdicts")) rep.checks.push_back(check_from_json(c));
    for (const auto& c : j.at("findings")) rep.checks.push_back(check_from_json(c));
    return rep;
}

std::string to_csv(const BoundReport& rep) {
    std::string out =
        "graph,k,alpha_k,alpha_exact,theta,theta_method,theta_prime,"
        "chi_exact,chi_lower,chi_lower_source,chi_upper,chi_upper_source,psi,"
        "sandwich_ok\n";
    for (const auto& r : rep.rows) {
        out += rep.graph_id + ',' + std::to_string(r.k) + ',';
        out += r.alpha_k ? format_value(r.alpha_k->value) : "";
        out += ',';
        out += r.alpha_k ? (r.alpha_k->exact ? "1" : "0") : "";
        out += ',' + format_value(r.theta.value) + ',' + r.theta.method + ',';
        out += r.theta_prime ? format_value(*r.theta_prime) : "";
        out += ',';
        out += r.chi_exact ? std::to_string(*r.chi_exact) : "";
        out += ',' + format_value(r.chi_lower.value) + ',' + r.chi_lower.source;
        out += ',' + format_value(r.chi_upper.value) + ',' + r.chi_upper.source;
        out += ',';
        out += rep.psi ? std::to_string(*rep.psi) : "";
        out += ',';
        out += r.sandwich_ok ? "1" : "0";
        out += '\n';
    }
    return out;
}

}  // namespace thetak
