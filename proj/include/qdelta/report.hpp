#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdelta/format.hpp"
#include "qdelta/lab.hpp"
#include "qdelta/lattice.hpp"

namespace qdelta {

using json = nlohmann::ordered_json;

/// Integers serialize as JSON numbers while they fit in 64 bits, as decimal
/// strings beyond that.
inline json to_json(const bigint& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str();
}

inline json to_json(const std::vector<bigint>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

inline json to_json(const int_matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return rows;
}

inline json to_json(const quotient_report& r) {
    json out;
    out["free_rank"] = r.free_rank;
    out["torsion"] = to_json(r.torsion);
    if (r.infinite())
        out["order"] = "infinite";
    else
        out["order"] = to_json(r.order());
    return out;
}

inline json to_json(const lattice& l) {
    json out;
    out["ambient_dim"] = l.ambient_dim();
    out["rank"] = l.rank();
    out["basis"] = to_json(l.basis());
    return out;
}

inline json to_json(const scan_row& row) {
    json out;
    out["n"] = row.n;
    out["k"] = row.k;
    out["mode"] = to_string(row.mode);
    if (row.limited) {
        out["status"] = "resource_limit";
        out["clause"] = to_string(row.clause);
        return out;
    }
    out["status"] = "ok";
    out["free_rank"] = row.quotient.free_rank;
    out["torsion"] = to_json(row.quotient.torsion);
    out["order"] = row.quotient.infinite() ? json("infinite")
                                           : to_json(row.quotient.order());
    out["clause"] = to_string(row.clause);
    out["verdict"] = to_string(row.verdict);
    return out;
}

inline json to_json(const lemma_report& r) {
    json out;
    out["n_max"] = r.n_max;
    out["cases_checked"] = r.cases_checked;
    out["passed"] = r.passed();
    json violations = json::array();
    for (const auto& v : r.violations) {
        json item;
        item["lemma"] = v.which;
        item["n"] = v.n;
        item["i"] = v.i;
        if (v.j >= 0) item["j"] = v.j;
        violations.push_back(item);
    }
    out["violations"] = violations;
    return out;
}

inline json to_json(const fixtures::erratum& e) {
    json out;
    out["location"] = e.location;
    out["printed"] = format_evector(e.printed);
    out["recomputed"] = format_evector(e.corrected);
    return out;
}

inline json to_json(const theorem_report& r) {
    json out;
    json steps = json::array();
    for (const auto& s : r.steps) {
        json item;
        item["name"] = s.name;
        item["passed"] = s.passed;
        if (!s.detail.empty()) item["detail"] = s.detail;
        steps.push_back(item);
    }
    out["steps"] = steps;
    out["quotient"] = to_json(r.quotient);
    json errata = json::array();
    for (const auto& e : r.errata) errata.push_back(to_json(e));
    out["errata"] = errata;
    out["passed"] = r.passed();
    return out;
}

/// Envelope shared by every CLI command: schema version, the echoed command
/// parameters, the results payload, and timing (kept outside the payload so
/// payloads compare byte-identical across runs).
inline json make_report_document(const std::string& command, json params,
                                 json results, double elapsed_seconds,
                                 json errata = json::array()) {
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    if (!errata.empty()) doc["errata"] = errata;
    doc["timing"] = {{"elapsed_seconds", elapsed_seconds}};
    return doc;
}

} // namespace qdelta
