#pragma once

#include <cstddef>
#include <vector>

#include "qdelta/hnf.hpp"
#include "qdelta/int_matrix.hpp"

namespace qdelta {

/// Smith normal form with unimodular witnesses: u * a * v == s, s diagonal
/// with non-negative entries d_1 | d_2 | ...
struct smith_decomposition {
    int_matrix u; // rows x rows, |det| = 1
    int_matrix s; // rows x cols, diagonal form
    int_matrix v; // cols x cols, |det| = 1
    int_matrix a; // the original matrix

    std::vector<bigint> diagonal() const {
        std::vector<bigint> d;
        const std::size_t k = std::min(s.rows(), s.cols());
        for (std::size_t i = 0; i < k; ++i) d.push_back(s(i, i));
        return d;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

inline smith_decomposition snf(const int_matrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    smith_decomposition out{int_matrix::identity(rows), a,
                            int_matrix::identity(cols), a};
    int_matrix& s = out.s;
    int_matrix& u = out.u;
    int_matrix& v = out.v;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (s(i, j) == 0) continue;
                if (!found || abs(s(i, j)) < abs(s(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break; // trailing block is zero

        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s(i, t) == 0) continue;
                const bigint q = detail::fdiv(s(i, t), s(t, t));
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s(i, t) != 0) {
                    // remainder became the smaller entry; promote it
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s(t, j) == 0) continue;
                const bigint q = detail::fdiv(s(t, j), s(t, t));
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;

            // pivot must divide every remaining entry for the chain to hold
            bool divides_all = true;
            for (std::size_t i = t + 1; i < rows && divides_all; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }

        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return out;
}

/// Invariant factors of the cokernel Z^cols / rowspan(a): the nonzero
/// diagonal entries of the SNF that exceed 1, in divisibility order.
inline std::vector<bigint> invariant_factors(const int_matrix& a) {
    std::vector<bigint> out;
    for (const auto& d : snf(a).diagonal())
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace qdelta
