#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdelta/quandle.hpp"
#include "qdelta/ring.hpp"

namespace qdelta {

/// Signed-term rendering of an e-vector, terms ordered by index:
/// "e1 - e2 - e7", "2e1 + e2", or "0".
inline std::string format_evector(const e_vector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const bigint mag = abs(v[i]);
        if (out.empty()) {
            if (v[i] < 0) out += "-";
        } else {
            out += v[i] < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.str();
        out += "e" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

/// Quandle file: JSON document with fields "name", "order", "table".
inline quandle load_quandle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open quandle file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument("quandle file " + path + ": " + e.what());
    }
    if (!doc.contains("order") || !doc.contains("table"))
        throw invalid_argument("quandle file needs fields 'order' and 'table'");
    const int n = doc["order"].get<int>();
    auto table = doc["table"].get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != n)
        throw invalid_argument("quandle file: table row count != order");
    std::string name = doc.value("name", std::string("file:" + path));
    return from_table(table, name);
}

inline void save_quandle_file(const quandle& q, const std::string& path) {
    nlohmann::json doc;
    doc["name"] = q.name();
    doc["order"] = q.order();
    std::vector<std::vector<int>> table(static_cast<std::size_t>(q.order()));
    for (int i = 0; i < q.order(); ++i)
        for (int j = 0; j < q.order(); ++j)
            table[static_cast<std::size_t>(i)].push_back(q.op(i, j));
    doc["table"] = table;
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
}

/// Selector syntax: dihedral:<n>, trivial:<n>, or file:<path>.
inline quandle parse_selector(const std::string& selector) {
    const auto colon = selector.find(':');
    if (colon == std::string::npos)
        throw invalid_argument("bad quandle selector: " + selector);
    const std::string kind = selector.substr(0, colon);
    const std::string arg = selector.substr(colon + 1);
    if (kind == "file") return load_quandle_file(arg);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw invalid_argument("bad quandle order in selector: " + selector);
    }
    if (kind == "dihedral") return make_dihedral(n);
    if (kind == "trivial") return make_trivial(n);
    throw invalid_argument("unknown quandle kind: " + kind);
}

/// Inclusive range "a..b" (or a single value "a").
inline std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw invalid_argument("bad range: " + text);
    }
}

} // namespace qdelta
