#pragma once

#include <cstddef>
#include <vector>

#include "qdelta/int_matrix.hpp"
#include "qdelta/lattice.hpp"
#include "qdelta/quandle.hpp"

namespace qdelta {

/// Element of Z[Q]: coefficient r_i on basis element a_i.
struct ring_element {
    std::vector<bigint> coeffs;

    bool operator==(const ring_element& other) const {
        return coeffs == other.coeffs;
    }

    ring_element& operator+=(const ring_element& other) {
        if (coeffs.size() != other.coeffs.size())
            throw quandle_mismatch("ring elements over different quandles");
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            coeffs[i] += other.coeffs[i];
        return *this;
    }
};

/// Coordinates in the e-basis {e_i = a_i - a_0, i = 1..n-1} of the
/// augmentation ideal.
using e_vector = std::vector<bigint>;

inline ring_element basis_element(const quandle& q, int i) {
    if (i < 0 || i >= q.order())
        throw index_out_of_range("basis element index out of range");
    ring_element x{std::vector<bigint>(q.order())};
    x.coeffs[i] = 1;
    return x;
}

/// Bilinear product: sum_{i,j} x_i y_j a_{i*j}.
inline ring_element multiply(const quandle& q, const ring_element& x,
                             const ring_element& y) {
    const std::size_t n = static_cast<std::size_t>(q.order());
    if (x.coeffs.size() != n || y.coeffs.size() != n)
        throw quandle_mismatch("ring element length != quandle order");
    ring_element out{std::vector<bigint>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coeffs[j] == 0) continue;
            out.coeffs[static_cast<std::size_t>(
                q.op(static_cast<int>(i), static_cast<int>(j)))] +=
                x.coeffs[i] * y.coeffs[j];
        }
    }
    return out;
}

/// Coefficient sum; its kernel is the augmentation ideal.
inline bigint augmentation(const ring_element& x) {
    bigint s = 0;
    for (const auto& c : x.coeffs) s += c;
    return s;
}

/// e-coordinates of an augmentation-zero element. Throws rather than
/// projecting if the augmentation is nonzero.
inline e_vector to_ebasis(const ring_element& x) {
    if (augmentation(x) != 0)
        throw not_augmentation_zero("element has nonzero augmentation");
    return {x.coeffs.begin() + 1, x.coeffs.end()};
}

inline ring_element from_ebasis(const quandle& q, const e_vector& coords) {
    const std::size_t n = static_cast<std::size_t>(q.order());
    if (coords.size() + 1 != n)
        throw quandle_mismatch("e-vector length != quandle order - 1");
    ring_element x{std::vector<bigint>(n)};
    for (std::size_t i = 1; i < n; ++i) {
        x.coeffs[i] = coords[i - 1];
        x.coeffs[0] -= coords[i - 1];
    }
    return x;
}

/// e_i * e_j expressed in the e-basis, 1 <= i, j <= n-1.
inline e_vector ebasis_product(const quandle& q, int i, int j) {
    if (i < 1 || i >= q.order() || j < 1 || j >= q.order())
        throw index_out_of_range("e-basis index out of range");
    ring_element ei{std::vector<bigint>(q.order())};
    ei.coeffs[i] = 1;
    ei.coeffs[0] = -1;
    ring_element ej{std::vector<bigint>(q.order())};
    ej.coeffs[j] = 1;
    ej.coeffs[0] = -1;
    return to_ebasis(multiply(q, ei, ej));
}

enum class power_mode { right, two_sided };

inline const char* to_string(power_mode m) {
    return m == power_mode::right ? "right" : "two-sided";
}

/// One step up the tower: given Delta^k as a lattice in e-coordinates,
/// returns Delta^{k+1}, generated by u * e_j for u in the basis of Delta^k
/// (plus e_j * u in two_sided mode).
inline lattice delta_power_step(const quandle& q, const lattice& current,
                                power_mode mode = power_mode::right) {
    const std::size_t dim = static_cast<std::size_t>(q.order()) - 1;
    if (current.ambient_dim() != dim)
        throw dimension_mismatch("lattice ambient != quandle order - 1");
    std::vector<std::vector<bigint>> gens;
    gens.reserve(current.rank() * dim * (mode == power_mode::right ? 1 : 2));
    for (std::size_t r = 0; r < current.rank(); ++r) {
        ring_element u = from_ebasis(q, current.basis().row(r));
        for (int j = 1; j < q.order(); ++j) {
            ring_element ej{std::vector<bigint>(q.order())};
            ej.coeffs[static_cast<std::size_t>(j)] = 1;
            ej.coeffs[0] = -1;
            gens.push_back(to_ebasis(multiply(q, u, ej)));
            if (mode == power_mode::two_sided)
                gens.push_back(to_ebasis(multiply(q, ej, u)));
        }
    }
    return lattice::from_generators(dim, gens);
}

/// The k-th power of the augmentation ideal as a sublattice of Z^{n-1}.
/// Delta^1 is the full lattice.
inline lattice delta_power(const quandle& q, int k,
                           power_mode mode = power_mode::right) {
    if (k < 1) throw invalid_argument("delta power k must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(q.order()) - 1;
    lattice current = lattice::full(dim);
    for (int step = 1; step < k; ++step)
        current = delta_power_step(q, current, mode);
    return current;
}

/// Structure of Delta^k / Delta^{k+1}.
inline quotient_report delta_quotient(const quandle& q, int k,
                                      power_mode mode = power_mode::right) {
    return quotient_invariants(delta_power(q, k, mode),
                               delta_power(q, k + 1, mode));
}

} // namespace qdelta
