#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdelta/hnf.hpp"
#include "qdelta/snf.hpp"

namespace qdelta {

/// Free rank and torsion invariant factors of a quotient of lattices.
/// order is the product of the torsion factors when the quotient is finite.
struct quotient_report {
    std::size_t free_rank = 0;
    std::vector<bigint> torsion; // each > 1, d_i | d_{i+1}
    bool infinite() const { return free_rank > 0; }
    bigint order() const {
        bigint o = 1;
        for (const auto& d : torsion) o *= d;
        return o;
    }
    bool operator==(const quotient_report& other) const {
        return free_rank == other.free_rank && torsion == other.torsion;
    }
};

/// A subgroup of Z^m held as its canonical HNF basis, so equality of
/// subgroups is equality of bases.
class lattice {
public:
    explicit lattice(std::size_t ambient_dim)
        : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static lattice from_generators(std::size_t ambient_dim,
                                   const std::vector<std::vector<bigint>>& gens) {
        for (const auto& g : gens)
            if (g.size() != ambient_dim)
                throw dimension_mismatch("generator length != ambient dimension");
        lattice l(ambient_dim);
        l.basis_ = hnf(int_matrix::from_rows(gens, ambient_dim));
        return l;
    }

    static lattice full(std::size_t ambient_dim) {
        lattice l(ambient_dim);
        l.basis_ = int_matrix::identity(ambient_dim);
        return l;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const int_matrix& basis() const { return basis_; }

    /// Integer coordinates of v in this basis, if v lies in the lattice.
    /// Forward substitution on the HNF pivot columns.
    std::optional<std::vector<bigint>> coordinates(
        const std::vector<bigint>& v) const {
        if (v.size() != ambient_)
            throw dimension_mismatch("vector length != ambient dimension");
        std::vector<bigint> residual = v;
        std::vector<bigint> coeffs(rank());
        for (std::size_t t = 0; t < rank(); ++t) {
            std::size_t p = pivot_col(t);
            const bigint& pivot = basis_(t, p);
            if (residual[p] % pivot != 0) return std::nullopt;
            coeffs[t] = residual[p] / pivot;
            if (coeffs[t] != 0)
                for (std::size_t j = 0; j < ambient_; ++j)
                    residual[j] -= coeffs[t] * basis_(t, j);
        }
        for (const auto& r : residual)
            if (r != 0) return std::nullopt;
        return coeffs;
    }

    bool contains(const std::vector<bigint>& v) const {
        return coordinates(v).has_value();
    }

    bool contains(const lattice& other) const {
        if (other.ambient_ != ambient_)
            throw dimension_mismatch("ambient dimensions differ");
        for (std::size_t i = 0; i < other.rank(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    bool operator==(const lattice& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    bool operator!=(const lattice& other) const { return !(*this == other); }

private:
    std::size_t pivot_col(std::size_t row) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(row, j) != 0) return j;
        throw error("zero row in canonical basis"); // unreachable for valid HNF
    }

    std::size_t ambient_;
    int_matrix basis_;
};

/// Structure of sup/sub: writes each sub basis row in sup coordinates and
/// reads the invariant factors off the SNF of that coefficient matrix.
inline quotient_report quotient_invariants(const lattice& sup, const lattice& sub) {
    if (sup.ambient_dim() != sub.ambient_dim())
        throw dimension_mismatch("ambient dimensions differ");
    int_matrix coeffs(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto row = sub.basis().row(i);
        auto c = sup.coordinates(row);
        if (!c) {
            std::string witness = "(";
            for (std::size_t j = 0; j < row.size(); ++j)
                witness += (j ? "," : "") + row[j].str();
            throw not_a_sublattice("sub basis vector " + witness +
                                   ") is not in the ambient lattice");
        }
        for (std::size_t j = 0; j < sup.rank(); ++j) coeffs(i, j) = (*c)[j];
    }
    quotient_report report;
    report.free_rank = sup.rank() - sub.rank();
    report.torsion = invariant_factors(coeffs);
    return report;
}

} // namespace qdelta
