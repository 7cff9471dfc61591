#pragma once

#include <chrono>
#include <cstddef>
#include <future>
#include <string>
#include <vector>

#include "qdelta/fixtures.hpp"
#include "qdelta/lattice.hpp"
#include "qdelta/quandle.hpp"
#include "qdelta/ring.hpp"

namespace qdelta {

// ---------------------------------------------------------------------------
// Lemma suites
// ---------------------------------------------------------------------------

/// Exhaustive check of the two even-order multiplication lemmas for every
/// even n = 2k in 4..n_max: e_i * e_k = 0 for all i, and
/// e_i * e_j = e_i * e_{k+j} for j = 1..k-1.
struct lemma_report {
    struct violation {
        int n;
        int i;
        int j;            // -1 for the zero-column lemma
        std::string which; // "zero_column" or "shift"
    };
    int n_max = 0;
    std::vector<violation> violations;
    long cases_checked = 0;
    bool passed() const { return violations.empty(); }
};

inline lemma_report check_lemmas(int n_max) {
    if (n_max < 4 || n_max % 2 != 0)
        throw invalid_argument("check_lemmas requires even n_max >= 4");
    lemma_report report;
    report.n_max = n_max;
    for (int n = 4; n <= n_max; n += 2) {
        const quandle q = make_dihedral(n);
        const int k = n / 2;
        const e_vector zero(static_cast<std::size_t>(n) - 1);
        for (int i = 1; i < n; ++i) {
            ++report.cases_checked;
            if (ebasis_product(q, i, k) != zero)
                report.violations.push_back({n, i, -1, "zero_column"});
            for (int j = 1; j < k; ++j) {
                ++report.cases_checked;
                if (ebasis_product(q, i, j) != ebasis_product(q, i, k + j))
                    report.violations.push_back({n, i, j, "shift"});
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Theorem replay for R_8
// ---------------------------------------------------------------------------

/// Full from-scratch replay of the R_8 computation: recomputed product
/// tables against the published fixtures (errata corrected), lattice
/// equality of Delta^2 and Delta^3 with the published bases, and the final
/// quotient. Errata are reported alongside but never counted as failures.
struct theorem_report {
    struct step {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<step> steps;
    quotient_report quotient;
    std::vector<fixtures::erratum> errata;
    bool passed() const {
        for (const auto& s : steps)
            if (!s.passed) return false;
        return true;
    }
};

inline theorem_report verify_theorem_r8() {
    theorem_report report;
    report.errata = fixtures::r8_errata();
    const quandle q = make_dihedral(8);

    // step 1: recomputed e_i * e_j matches the corrected published table
    {
        bool ok = true;
        std::string detail;
        const auto& table = fixtures::r8_e_table();
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 3; ++j)
                if (ebasis_product(q, i, j) != table[i - 1][j - 1]) {
                    ok = false;
                    detail += " (e" + std::to_string(i) + ",e" +
                              std::to_string(j) + ") mismatch;";
                }
        report.steps.push_back({"e_i*e_j table (21 entries)", ok, detail});
    }

    const lattice delta2 = delta_power(q, 2);
    const lattice b2_span = lattice::from_generators(7, fixtures::r8_basis_b2());

    // step 2: Delta^2 equals the span of B2
    report.steps.push_back({"Delta^2(R_8) == span(B_2)", delta2 == b2_span, ""});

    // step 3: u_i * e_j products match the corrected published table
    {
        bool ok = true;
        std::string detail;
        const auto& table = fixtures::r8_u_table();
        const auto& b2 = fixtures::r8_basis_b2();
        for (int i = 0; i < 6; ++i) {
            const ring_element u = from_ebasis(q, b2[static_cast<std::size_t>(i)]);
            for (int j = 1; j <= 3; ++j) {
                const ring_element ej =
                    multiply(q, u, from_ebasis(q, [&] {
                                 e_vector e(7);
                                 e[static_cast<std::size_t>(j) - 1] = 1;
                                 return e;
                             }()));
                if (to_ebasis(ej) != table[static_cast<std::size_t>(i)][j - 1]) {
                    ok = false;
                    detail += " (u" + std::to_string(i + 1) + ",e" +
                              std::to_string(j) + ") mismatch;";
                }
            }
        }
        report.steps.push_back({"u_i*e_j table (18 entries)", ok, detail});
    }

    // step 4: Delta^3 equals the span of B3
    const lattice delta3 = delta_power(q, 3);
    const lattice b3_span = lattice::from_generators(7, fixtures::r8_basis_b3());
    report.steps.push_back({"Delta^3(R_8) == span(B_3)", delta3 == b3_span, ""});

    // step 5: the quotient is Z_4 (+) Z_4 of order 16
    report.quotient = quotient_invariants(delta2, delta3);
    const bool q_ok = report.quotient.free_rank == 0 &&
                      report.quotient.torsion ==
                          std::vector<bigint>{bigint(4), bigint(4)};
    report.steps.push_back(
        {"Delta^2/Delta^3 == Z_4 (+) Z_4, order 16", q_ok, ""});

    return report;
}

// ---------------------------------------------------------------------------
// Conjecture scanner
// ---------------------------------------------------------------------------

enum class clause_kind { odd_clause, even_clause, not_applicable };
enum class verdict_kind { consistent, counterexample, not_applicable };

inline const char* to_string(clause_kind c) {
    switch (c) {
    case clause_kind::odd_clause: return "odd_clause";
    case clause_kind::even_clause: return "even_clause";
    default: return "not_applicable";
    }
}

inline const char* to_string(verdict_kind v) {
    switch (v) {
    case verdict_kind::consistent: return "consistent";
    case verdict_kind::counterexample: return "counterexample";
    default: return "not_applicable";
    }
}

/// Which conjecture clause, if any, makes a claim about the pair (n, k).
inline clause_kind applicable_clause(int n, int k) {
    if (n % 2 == 1 && n > 1 && k >= 1) return clause_kind::odd_clause;
    if (n % 2 == 0 && n > 2 && k >= 2) return clause_kind::even_clause;
    return clause_kind::not_applicable;
}

/// Verdict for a computed quotient against the clause's claim: the odd
/// clause predicts the group Z_n, the even clause only the order n.
inline verdict_kind classify(clause_kind clause, int n,
                             const quotient_report& quotient) {
    switch (clause) {
    case clause_kind::odd_clause: {
        const bool matches = quotient.free_rank == 0 &&
                             quotient.torsion == std::vector<bigint>{bigint(n)};
        return matches ? verdict_kind::consistent : verdict_kind::counterexample;
    }
    case clause_kind::even_clause: {
        const bool matches = quotient.free_rank == 0 && quotient.order() == n;
        return matches ? verdict_kind::consistent : verdict_kind::counterexample;
    }
    default:
        return verdict_kind::not_applicable;
    }
}

struct scan_row {
    int n = 0;
    int k = 0;
    power_mode mode = power_mode::right;
    bool limited = false; // true when the work ceiling skipped this cell
    quotient_report quotient;
    clause_kind clause = clause_kind::not_applicable;
    verdict_kind verdict = verdict_kind::not_applicable;
    double elapsed_seconds = 0.0;
};

/// Work estimate per cell, compared against the configurable ceiling.
inline long scan_work_estimate(int n, int k) {
    return static_cast<long>(n) * n * k;
}

/// Sweeps the inclusive (n, k) grid. Cells for one n share the Delta tower;
/// distinct n values fan out to at most `jobs` workers. `limit` is a ceiling
/// on the per-cell work estimate, 0 meaning unlimited; cells over the ceiling
/// are flagged and skipped while the rest of the sweep continues.
inline std::vector<scan_row> scan(int n_from, int n_to, int k_from, int k_to,
                                  power_mode mode = power_mode::right,
                                  int jobs = 1, long limit = 0) {
    if (n_from < 3 || n_from > n_to)
        throw invalid_argument("scan requires 3 <= n_from <= n_to");
    if (k_from < 1 || k_from > k_to)
        throw invalid_argument("scan requires 1 <= k_from <= k_to");

    auto scan_one_n = [=](int n) {
        std::vector<scan_row> rows;
        const quandle q = make_dihedral(n);
        lattice tower = delta_power(q, k_from, mode);
        int tower_k = k_from;
        for (int k = k_from; k <= k_to; ++k) {
            scan_row row;
            row.n = n;
            row.k = k;
            row.mode = mode;
            row.clause = applicable_clause(n, k);
            if (limit > 0 && scan_work_estimate(n, k) > limit) {
                row.limited = true;
                rows.push_back(row);
                continue;
            }
            const auto start = std::chrono::steady_clock::now();
            while (tower_k < k) {
                tower = delta_power_step(q, tower, mode);
                ++tower_k;
            }
            const lattice next = delta_power_step(q, tower, mode);
            row.quotient = quotient_invariants(tower, next);
            row.verdict = classify(row.clause, n, row.quotient);
            row.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
            tower = next;
            tower_k = k + 1;
            rows.push_back(row);
        }
        return rows;
    };

    std::vector<scan_row> out;
    if (jobs <= 1) {
        for (int n = n_from; n <= n_to; ++n) {
            auto rows = scan_one_n(n);
            out.insert(out.end(), rows.begin(), rows.end());
        }
        return out;
    }

    // bounded fan-out over n; results assembled in n order regardless of
    // completion order
    std::vector<std::future<std::vector<scan_row>>> futures;
    int next_n = n_from;
    while (next_n <= n_to || !futures.empty()) {
        while (next_n <= n_to &&
               static_cast<int>(futures.size()) < jobs) {
            futures.push_back(
                std::async(std::launch::async, scan_one_n, next_n));
            ++next_n;
        }
        auto rows = futures.front().get();
        futures.erase(futures.begin());
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

} // namespace qdelta
