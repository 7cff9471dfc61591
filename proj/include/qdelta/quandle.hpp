#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdelta/errors.hpp"

namespace qdelta {

/// A single failed quandle axiom instance, with the indices that witness it.
struct axiom_violation {
    enum class kind {
        not_square,
        entry_out_of_range,
        idempotency,
        not_bijective,
        not_homomorphism,
    };

    kind which{};
    int i = -1;
    int j = -1;
    int l = -1;

    std::string describe() const {
        switch (which) {
        case kind::not_square:
            return "table is not square";
        case kind::entry_out_of_range:
            return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                   ") out of range";
        case kind::idempotency:
            return "idempotency fails at i=" + std::to_string(i);
        case kind::not_bijective:
            return "right translation S_" + std::to_string(j) +
                   " is not a bijection";
        case kind::not_homomorphism:
            return "S_" + std::to_string(j) + " is not a homomorphism at (i=" +
                   std::to_string(i) + ", l=" + std::to_string(l) + ")";
        }
        return "unknown violation";
    }
};

/// Finite quandle given by its Cayley table. Element a_i is the index i;
/// table(i, j) is the index of a_i * a_j. Immutable after construction.
class quandle {
public:
    quandle(int order, std::vector<int> table, std::string name)
        : n_(order), table_(std::move(table)), name_(std::move(name)) {}

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    /// Index of a_i * a_j.
    int op(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<int>& table() const { return table_; }

private:
    int n_;
    std::vector<int> table_; // row-major n x n
    std::string name_;
};

/// Checks all three quandle axioms exhaustively and returns every violated
/// instance. Empty result means the table defines a quandle.
inline std::vector<axiom_violation> validate_table(
    const std::vector<std::vector<int>>& table) {
    std::vector<axiom_violation> out;
    const int n = static_cast<int>(table.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            out.push_back({axiom_violation::kind::not_square, i, -1, -1});
            return out; // nothing else is meaningful for a ragged table
        }
    }
    bool in_range = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) {
                out.push_back({axiom_violation::kind::entry_out_of_range, i, j, -1});
                in_range = false;
            }
        }
    }
    if (!in_range) return out;

    for (int i = 0; i < n; ++i) {
        if (table[i][i] != i) {
            out.push_back({axiom_violation::kind::idempotency, i, -1, -1});
        }
    }
    for (int j = 0; j < n; ++j) {
        std::vector<bool> hit(n, false);
        bool bijective = true;
        for (int i = 0; i < n; ++i) {
            if (hit[table[i][j]]) bijective = false;
            hit[table[i][j]] = true;
        }
        if (!bijective) {
            out.push_back({axiom_violation::kind::not_bijective, -1, j, -1});
        }
    }
    // S_j(i*l) == S_j(i) * S_j(l)
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) {
                if (table[table[i][l]][j] != table[table[i][j]][table[l][j]]) {
                    out.push_back({axiom_violation::kind::not_homomorphism, i, j, l});
                }
            }
        }
    }
    return out;
}

/// Builds a quandle from an explicit table, throwing with every violated
/// axiom instance listed if the table is not a quandle.
inline quandle from_table(const std::vector<std::vector<int>>& table,
                          std::string name = {}) {
    auto violations = validate_table(table);
    if (!violations.empty()) {
        std::string msg = "table does not define a quandle:";
        for (const auto& v : violations) msg += "\n  " + v.describe();
        throw invalid_quandle(msg);
    }
    const int n = static_cast<int>(table.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table)
        flat.insert(flat.end(), row.begin(), row.end());
    return quandle(n, std::move(flat), std::move(name));
}

/// Dihedral quandle R_n on Z_n: a_i * a_j = a_{(2j - i) mod n}.
inline quandle make_dihedral(int n) {
    if (n < 1) throw invalid_argument("dihedral quandle order must be >= 1");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(i) * n + j] = ((2 * j - i) % n + n) % n;
    return quandle(n, std::move(flat), "dihedral:" + std::to_string(n));
}

/// Trivial quandle: a_i * a_j = a_i.
inline quandle make_trivial(int n) {
    if (n < 1) throw invalid_argument("trivial quandle order must be >= 1");
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(i) * n + j] = i;
    return quandle(n, std::move(flat), "trivial:" + std::to_string(n));
}

/// The permutation i -> i * a_j (column j of the Cayley table).
inline std::vector<int> right_translation(const quandle& q, int j) {
    if (j < 0 || j >= q.order())
        throw index_out_of_range("right_translation: j out of range");
    std::vector<int> perm(q.order());
    for (int i = 0; i < q.order(); ++i) perm[i] = q.op(i, j);
    return perm;
}

} // namespace qdelta
