// qdelta: compute augmentation-ideal quotient structure of finite quandles.
//
// Commands: table, quotient, verify-paper, scan, validate.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 resource limit aborted every cell.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdelta/qdelta.hpp"

namespace {

using namespace qdelta;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

power_mode parse_mode(const std::string& mode) {
    if (mode == "right") return power_mode::right;
    if (mode == "two-sided") return power_mode::two_sided;
    throw invalid_argument("mode must be right or two-sided");
}

std::string order_string(const quotient_report& r) {
    return r.infinite() ? "infinite" : r.order().str();
}

std::string torsion_string(const quotient_report& r, const char* sep = ";") {
    std::string out;
    for (std::size_t i = 0; i < r.torsion.size(); ++i) {
        if (i) out += sep;
        out += r.torsion[i].str();
    }
    return out;
}

int run_table(const std::string& selector, const std::string& basis,
              const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const quandle q = parse_selector(selector);
    json rows = json::array();
    std::ostringstream text;
    if (basis == "a") {
        for (int i = 0; i < q.order(); ++i) {
            json row = json::array();
            for (int j = 0; j < q.order(); ++j) {
                row.push_back(q.op(i, j));
                text << "a" << q.op(i, j) << (j + 1 < q.order() ? " " : "\n");
            }
            rows.push_back(row);
        }
    } else {
        if (q.order() < 2) throw invalid_argument("e-basis table needs order >= 2");
        for (int i = 1; i < q.order(); ++i) {
            json row = json::array();
            for (int j = 1; j < q.order(); ++j) {
                const std::string entry = format_evector(ebasis_product(q, i, j));
                row.push_back(entry);
                text << std::setw(18) << std::left << entry
                     << (j + 1 < q.order() ? " | " : "\n");
            }
            rows.push_back(row);
        }
    }
    json results;
    results["quandle"] = q.name();
    results["order"] = q.order();
    results["basis"] = basis;
    results["table"] = rows;
    if (format == "json") {
        std::cout << make_report_document(
                         "table",
                         {{"selector", selector}, {"basis", basis}}, results,
                         seconds_since(start))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << text.str();
    }
    return 0;
}

int run_quotient(const std::string& selector, int k, const std::string& mode_str,
                 const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const quandle q = parse_selector(selector);
    const power_mode mode = parse_mode(mode_str);
    const lattice sup = delta_power(q, k, mode);
    const lattice sub = delta_power_step(q, sup, mode);
    const quotient_report report = quotient_invariants(sup, sub);
    json results;
    results["quandle"] = q.name();
    results["k"] = k;
    results["mode"] = mode_str;
    results["quotient"] = to_json(report);
    results["sup_basis"] = to_json(sup);
    results["sub_basis"] = to_json(sub);
    if (format == "json") {
        std::cout << make_report_document(
                         "quotient",
                         {{"selector", selector}, {"k", k}, {"mode", mode_str}},
                         results, seconds_since(start))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "Delta^" << k << "/Delta^" << k + 1 << " of " << q.name()
                  << ":\n"
                  << "  free_rank " << report.free_rank << "\n"
                  << "  torsion   [" << torsion_string(report, ", ") << "]\n"
                  << "  order     " << order_string(report) << "\n";
    }
    return 0;
}

int run_verify_paper(const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const lemma_report lemmas = check_lemmas(24);
    const theorem_report theorem = verify_theorem_r8();
    const bool ok = lemmas.passed() && theorem.passed();
    if (format == "json") {
        json results;
        results["lemmas"] = to_json(lemmas);
        results["theorem_r8"] = to_json(theorem);
        results["passed"] = ok;
        json errata = json::array();
        for (const auto& e : theorem.errata) errata.push_back(to_json(e));
        std::cout << make_report_document("verify-paper", json::object(),
                                          results, seconds_since(start), errata)
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "lemma suite (even n in 4..24): "
                  << (lemmas.passed() ? "pass" : "FAIL") << ", "
                  << lemmas.cases_checked << " cases, "
                  << lemmas.violations.size() << " violations\n";
        for (const auto& s : theorem.steps)
            std::cout << (s.passed ? "pass" : "FAIL") << "  " << s.name
                      << (s.detail.empty() ? "" : "  [" + s.detail + "]") << "\n";
        std::cout << "quotient: free_rank " << theorem.quotient.free_rank
                  << ", torsion [" << torsion_string(theorem.quotient, ", ")
                  << "], order " << order_string(theorem.quotient);
        if (theorem.quotient.torsion ==
            std::vector<bigint>{bigint(4), bigint(4)})
            std::cout << "  -- Z_4 (+) Z_4";
        std::cout << "\n";
        for (const auto& e : theorem.errata)
            std::cout << "erratum: " << e.location << " printed \""
                      << format_evector(e.printed) << "\", recomputed \""
                      << format_evector(e.corrected) << "\"\n";
    }
    return ok ? 0 : 1;
}

int run_scan(const std::string& n_range, const std::string& k_range,
             const std::string& mode_str, const std::string& format, int jobs,
             long limit) {
    const auto start = std::chrono::steady_clock::now();
    const auto [n_from, n_to] = parse_range(n_range);
    const auto [k_from, k_to] = parse_range(k_range);
    const power_mode mode = parse_mode(mode_str);
    const auto rows = scan(n_from, n_to, k_from, k_to, mode, jobs, limit);

    std::size_t consistent = 0, counterexamples = 0, not_applicable = 0,
                limited = 0;
    for (const auto& row : rows) {
        if (row.limited) {
            ++limited;
            continue;
        }
        switch (row.verdict) {
        case verdict_kind::consistent: ++consistent; break;
        case verdict_kind::counterexample: ++counterexamples; break;
        default: ++not_applicable; break;
        }
    }

    if (format == "csv") {
        std::cout << "n,k,mode,status,free_rank,torsion,order,clause,verdict\n";
        for (const auto& row : rows) {
            std::cout << row.n << "," << row.k << "," << to_string(row.mode)
                      << ",";
            if (row.limited) {
                std::cout << "resource_limit,,,," << to_string(row.clause)
                          << ",\n";
                continue;
            }
            std::cout << "ok," << row.quotient.free_rank << ","
                      << torsion_string(row.quotient) << ","
                      << order_string(row.quotient) << ","
                      << to_string(row.clause) << "," << to_string(row.verdict)
                      << "\n";
        }
    } else if (format == "json") {
        json results;
        json jrows = json::array();
        for (const auto& row : rows) jrows.push_back(to_json(row));
        results["rows"] = jrows;
        results["summary"] = {{"consistent", consistent},
                              {"counterexample", counterexamples},
                              {"not_applicable", not_applicable},
                              {"resource_limit", limited}};
        std::cout << make_report_document("scan",
                                          {{"n", n_range},
                                           {"k", k_range},
                                           {"mode", mode_str},
                                           {"jobs", jobs},
                                           {"limit", limit}},
                                          results, seconds_since(start))
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& row : rows) {
            std::cout << "n=" << std::setw(2) << row.n << " k=" << row.k << "  ";
            if (row.limited) {
                std::cout << "resource_limit\n";
                continue;
            }
            std::cout << "free_rank " << row.quotient.free_rank << "  torsion ["
                      << torsion_string(row.quotient, ", ") << "]  order "
                      << std::setw(9) << std::left << order_string(row.quotient)
                      << " " << to_string(row.verdict) << "\n";
        }
        std::cout << "summary: " << consistent << " consistent, "
                  << counterexamples << " counterexample, " << not_applicable
                  << " not_applicable, " << limited << " resource_limit\n";
    }
    // counterexamples are findings, not errors
    if (limited == rows.size() && !rows.empty()) return 3;
    return 0;
}

int run_validate(const std::string& selector) {
    try {
        const quandle q = parse_selector(selector);
        std::cout << "valid quandle: " << q.name() << ", order " << q.order()
                  << "\n";
        return 0;
    } catch (const invalid_quandle& e) {
        std::cout << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"augmentation-ideal quotients of finite quandles"};
    app.require_subcommand(1);

    std::string selector, basis = "a", mode = "right", format = "json";
    std::string n_range, k_range;
    int k = 1, jobs = 1;
    long limit = 0;

    auto* table = app.add_subcommand("table", "Cayley or e-product table");
    table->add_option("selector", selector, "dihedral:<n>, trivial:<n>, file:<path>")
        ->required();
    table->add_option("--basis", basis, "a or e")->check(CLI::IsMember({"a", "e"}));
    table->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* quotient = app.add_subcommand("quotient", "Delta^k/Delta^{k+1} structure");
    quotient->add_option("selector", selector)->required();
    quotient->add_option("--k", k, "power k >= 1")->required();
    quotient->add_option("--mode", mode)->check(CLI::IsMember({"right", "two-sided"}));
    quotient->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify-paper",
                                      "replay the published R_8 computation");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* scan_cmd = app.add_subcommand("scan", "sweep (n, k) for violations");
    scan_cmd->add_option("--n", n_range, "inclusive range a..b")->required();
    scan_cmd->add_option("--k", k_range, "inclusive range a..b")->required();
    scan_cmd->add_option("--mode", mode)->check(CLI::IsMember({"right", "two-sided"}));
    scan_cmd->add_option("--format", format)
        ->check(CLI::IsMember({"json", "csv", "text"}));
    scan_cmd->add_option("--jobs", jobs, "worker pool size");
    scan_cmd->add_option("--limit", limit, "per-cell work ceiling, 0 = none");

    auto* validate = app.add_subcommand("validate", "check a quandle file or selector");
    validate->add_option("selector", selector)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) return run_table(selector, basis, format);
        if (*quotient) return run_quotient(selector, k, mode, format);
        if (*verify) return run_verify_paper(format);
        if (*scan_cmd) return run_scan(n_range, k_range, mode, format, jobs, limit);
        if (*validate) return run_validate(selector);
    } catch (const qdelta::invalid_quandle& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const qdelta::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
