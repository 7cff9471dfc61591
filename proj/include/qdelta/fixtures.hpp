#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdelta/int_matrix.hpp"
#include "qdelta/ring.hpp"

namespace qdelta::fixtures {

/// One documented erratum in the published R_8 tables: the value as printed
/// and the value recomputation gives. Lattice-level conclusions are
/// unaffected either way.
struct erratum {
    std::string location;
    e_vector printed;
    e_vector corrected;
};

inline e_vector ev(std::initializer_list<long long> coords) {
    e_vector v;
    for (long long c : coords) v.emplace_back(c);
    return v;
}

/// The published e_i * e_j table for R_8 (rows i = 1..7, columns j = 1..3;
/// columns 4..7 follow from the two lemmas), with the known errata corrected.
inline const std::array<std::array<e_vector, 3>, 7>& r8_e_table() {
    static const std::array<std::array<e_vector, 3>, 7> table = {{
        // e1 * {e1, e2, e3}
        {ev({1, -1, 0, 0, 0, 0, -1}), ev({0, 0, 1, -1, 0, 0, -1}),
         ev({0, 0, 0, 0, 1, -1, -1})},
        // e2: the (2,3) entry is the corrected e4 - 2e6, not the printed -2e6
        {ev({0, -1, 0, 0, 0, -1, 0}), ev({0, 1, 0, -1, 0, -1, 0}),
         ev({0, 0, 0, 1, 0, -2, 0})},
        // e3
        {ev({0, -1, 0, 0, -1, 0, 1}), ev({1, 0, 0, -1, -1, 0, 0}),
         ev({0, 0, 1, 0, -1, -1, 0})},
        // e4
        {ev({0, -1, 0, -1, 0, 1, 0}), ev({0, 0, 0, -2, 0, 0, 0}),
         ev({0, 1, 0, -1, 0, -1, 0})},
        // e5
        {ev({0, -1, -1, 0, 1, 0, 0}), ev({0, 0, -1, -1, 0, 0, 1}),
         ev({1, 0, -1, 0, 0, -1, 0})},
        // e6
        {ev({0, -2, 0, 1, 0, 0, 0}), ev({0, -1, 0, -1, 0, 1, 0}),
         ev({0, -1, 0, 0, 0, -1, 0})},
        // e7
        {ev({-1, -1, 1, 0, 0, 0, 0}), ev({-1, 0, 0, -1, 1, 0, 0}),
         ev({-1, 0, 0, 0, 0, -1, 1})},
    }};
    return table;
}

/// Published Z-basis of Delta^2(R_8).
inline const std::vector<e_vector>& r8_basis_b2() {
    static const std::vector<e_vector> b2 = {
        ev({1, -1, 0, 0, 0, 0, -1}), // u1
        ev({0, 1, 0, 0, 0, 1, 0}),  // u2
        ev({0, 0, 1, -1, 0, 0, -1}), // u3
        ev({0, 0, 0, 1, 0, 2, 0}),  // u4
        ev({0, 0, 0, 0, 1, -1, -1}), // u5
        ev({0, 0, 0, 0, 0, 4, 0}),  // u6
    };
    return b2;
}

/// The published u_i * e_j table (rows u1..u6, columns e1..e3), with the
/// u4 * e1 erratum corrected.
inline const std::array<std::array<e_vector, 3>, 6>& r8_u_table() {
    static const std::array<std::array<e_vector, 3>, 6> table = {{
        {ev({2, 1, -1, 0, 0, 1, -1}), ev({1, -1, 1, 1, -1, 1, -1}),
         ev({1, 0, 0, -1, 1, 2, -2})},
        {ev({0, -3, 0, 1, 0, -1, 0}), ev({0, 0, 0, -2, 0, 0, 0}),
         ev({0, -1, 0, 1, 0, -3, 0})},
        {ev({1, 1, -1, 1, -1, -1, 1}), ev({2, 0, 0, 2, -2, 0, 0}),
         ev({1, -1, 1, 1, -1, 1, -1})},
        // u4 * e1 is the corrected -5e2 + e4 + e6, not the printed -5e2 - e4 + e6
        {ev({0, -5, 0, 1, 0, 1, 0}), ev({0, -2, 0, -4, 0, 2, 0}),
         ev({0, -1, 0, -1, 0, -3, 0})},
        {ev({1, 2, -2, -1, 1, 0, 0}), ev({1, 1, -1, 1, -1, -1, 1}),
         ev({2, 1, -1, 0, 0, 1, -1})},
        {ev({0, -8, 0, 4, 0, 0, 0}), ev({0, -4, 0, -4, 0, 4, 0}),
         ev({0, -4, 0, 0, 0, -4, 0})},
    }};
    return table;
}

/// Published Z-basis of Delta^3(R_8).
inline const std::vector<e_vector>& r8_basis_b3() {
    static const std::vector<e_vector> b3 = {
        ev({1, -1, 1, 1, -1, 1, -1}),  // v1
        ev({0, 1, -1, -2, 2, 1, -1}),  // v2
        ev({0, 0, -1, -1, 2, -2, -1}), // v3
        ev({0, 0, 0, -2, 0, 0, 0}),    // v4
        ev({0, 0, 0, 0, -4, -4, 4}),   // v5
        ev({0, 0, 0, 0, 0, 8, 0}),     // v6
    };
    return b3;
}

inline const std::vector<erratum>& r8_errata() {
    static const std::vector<erratum> errata = {
        {"e_2 * e_3 (first table)", ev({0, 0, 0, 0, 0, -2, 0}),
         ev({0, 0, 0, 1, 0, -2, 0})},
        {"u_4 * e_1 (second table)", ev({0, -5, 0, -1, 0, 1, 0}),
         ev({0, -5, 0, 1, 0, 1, 0})},
    };
    return errata;
}

} // namespace qdelta::fixtures
