#pragma once

#include <cstddef>
#include <tuple>

#include "qdelta/int_matrix.hpp"

namespace qdelta {

namespace detail {

/// Extended gcd: returns (g, x, y) with x*a + y*b = g, g >= 0.
inline std::tuple<bigint, bigint, bigint> exgcd(const bigint& a, const bigint& b) {
    if (b == 0) {
        if (a < 0) return {-a, -1, 0};
        return {a, 1, 0};
    }
    auto [g, x, y] = exgcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

/// Floor division (rounds toward negative infinity).
inline bigint fdiv(const bigint& a, const bigint& b) {
    bigint q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace detail

/// Canonical row Hermite normal form of the row span of m. Pivots are
/// positive, pivot columns strictly increase, entries above a pivot lie in
/// [0, pivot), zero rows are dropped. Two generating sets of the same
/// subgroup of Z^c produce identical output.
inline int_matrix hnf(int_matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0; // next pivot row
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m(p, col) == 0) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        // zero out everything below the pivot with unimodular row pairs
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const bigint a = m(r, col);
            const bigint b = m(i, col);
            auto [g, x, y] = detail::exgcd(a, b);
            const bigint as = a / g;
            const bigint bs = b / g;
            for (std::size_t j = col; j < cols; ++j) {
                const bigint rj = m(r, j);
                const bigint ij = m(i, j);
                m(r, j) = x * rj + y * ij;
                m(i, j) = -bs * rj + as * ij;
            }
        }
        if (m(r, col) < 0) m.negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            const bigint q = detail::fdiv(m(i, col), m(r, col));
            if (q != 0) m.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    // r is the rank; keep only the nonzero rows
    int_matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return out;
}

} // namespace qdelta
