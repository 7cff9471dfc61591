#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qdelta/fixtures.hpp"
#include "qdelta/ring.hpp"

using namespace qdelta;
using fixtures::ev;

namespace {

ring_element random_element(const quandle& q, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    ring_element x{std::vector<bigint>(static_cast<std::size_t>(q.order()))};
    for (auto& c : x.coeffs) c = coeff(rng);
    return x;
}

ring_element e(const quandle& q, int i) {
    ring_element x{std::vector<bigint>(static_cast<std::size_t>(q.order()))};
    x.coeffs[static_cast<std::size_t>(i)] = 1;
    x.coeffs[0] -= 1;
    return x;
}

} // namespace

TEST_CASE("multiply") {
    const quandle r8 = make_dihedral(8);
    // (a1 - a0)^2 = a0 + a1 - a2 - a7
    const ring_element square = multiply(r8, e(r8, 1), e(r8, 1));
    CHECK(square.coeffs == std::vector<bigint>{1, 1, -1, 0, 0, 0, 0, -1});

    for (int i = 0; i < 8; ++i)
        CHECK(multiply(r8, basis_element(r8, i), basis_element(r8, i)) ==
              basis_element(r8, i));

    // e_2 * e_4 = 0: the zero-column lemma at n = 8
    const ring_element zero = multiply(r8, e(r8, 2), e(r8, 4));
    for (const auto& c : zero.coeffs) CHECK(c == 0);

    const quandle r4 = make_dihedral(4);
    CHECK_THROWS_AS(multiply(r8, basis_element(r8, 0), basis_element(r4, 0)),
                    quandle_mismatch);
}

TEST_CASE("multiply is bilinear") {
    const quandle q = make_dihedral(9);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        ring_element x = random_element(q, rng);
        const ring_element xp = random_element(q, rng);
        const ring_element y = random_element(q, rng);

        ring_element sum = x;
        sum += xp;
        ring_element lhs = multiply(q, sum, y);
        ring_element rhs = multiply(q, x, y);
        rhs += multiply(q, xp, y);
        CHECK(lhs == rhs);

        ring_element sum2 = x;
        sum2 += xp;
        lhs = multiply(q, y, sum2);
        rhs = multiply(q, y, x);
        rhs += multiply(q, y, xp);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("augmentation") {
    const quandle r8 = make_dihedral(8);
    ring_element x{std::vector<bigint>(8)};
    x.coeffs[3] = 1;
    x.coeffs[0] = -1;
    CHECK(augmentation(x) == 0);

    ring_element y{std::vector<bigint>(8)};
    y.coeffs[1] = 2;
    y.coeffs[2] = 3;
    CHECK(augmentation(y) == 5);
}

TEST_CASE("augmentation is multiplicative") {
    std::mt19937 rng(47);
    for (int n : {3, 5, 8, 12}) {
        const quandle q = make_dihedral(n);
        for (int trial = 0; trial < 100; ++trial) {
            const ring_element x = random_element(q, rng);
            const ring_element y = random_element(q, rng);
            CHECK(augmentation(multiply(q, x, y)) ==
                  augmentation(x) * augmentation(y));
        }
    }
}

TEST_CASE("e-basis conversion") {
    const quandle r8 = make_dihedral(8);
    CHECK(to_ebasis(e(r8, 1)) == ev({1, 0, 0, 0, 0, 0, 0}));

    // a1 - a7 - a2 + a0 -> e1 - e2 - e7
    ring_element x{std::vector<bigint>{1, 1, -1, 0, 0, 0, 0, -1}};
    CHECK(to_ebasis(x) == ev({1, -1, 0, 0, 0, 0, -1}));

    CHECK(to_ebasis(ring_element{std::vector<bigint>(8)}) ==
          ev({0, 0, 0, 0, 0, 0, 0}));

    CHECK_THROWS_AS(to_ebasis(basis_element(r8, 1)), not_augmentation_zero);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        e_vector coords(7);
        for (auto& c : coords) c = coeff(rng);
        CHECK(to_ebasis(from_ebasis(r8, coords)) == coords);
    }
}

TEST_CASE("ebasis_product fixtures") {
    const quandle r8 = make_dihedral(8);
    CHECK(ebasis_product(r8, 1, 1) == ev({1, -1, 0, 0, 0, 0, -1}));
    for (int i = 1; i <= 7; ++i)
        CHECK(ebasis_product(r8, i, 4) == ev({0, 0, 0, 0, 0, 0, 0}));
    // direct expansion (a2-a0)(a3-a0) = a4 - 2a6 + a0
    CHECK(ebasis_product(r8, 2, 3) == ev({0, 0, 0, 1, 0, -2, 0}));
    CHECK_THROWS_AS(ebasis_product(r8, 0, 1), index_out_of_range);
    CHECK_THROWS_AS(ebasis_product(r8, 1, 8), index_out_of_range);
}

TEST_CASE("dihedral closed form: e_i*e_j = e_{2j-i} - e_{n-i} - e_{2j}") {
    for (int n = 2; n <= 24; ++n) {
        const quandle q = make_dihedral(n);
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                e_vector expected(static_cast<std::size_t>(n) - 1);
                auto add = [&](int index, int sign) {
                    const int reduced = ((index % n) + n) % n;
                    if (reduced != 0) // e_0 = 0 by convention
                        expected[static_cast<std::size_t>(reduced) - 1] += sign;
                };
                add(2 * j - i, 1);
                add(n - i, -1);
                add(2 * j, -1);
                CAPTURE(n, i, j);
                CHECK(ebasis_product(q, i, j) == expected);
            }
    }
}

TEST_CASE("delta_power") {
    const quandle r8 = make_dihedral(8);

    SECTION("k = 1 is the full lattice") {
        for (int n : {2, 3, 8, 12}) {
            const quandle q = make_dihedral(n);
            CHECK(delta_power(q, 1) ==
                  lattice::full(static_cast<std::size_t>(n) - 1));
        }
        CHECK_THROWS_AS(delta_power(r8, 0), invalid_argument);
    }

    SECTION("Delta^2(R_8) equals the published B_2 and its canonical basis") {
        const lattice d2 = delta_power(r8, 2);
        CHECK(d2 == lattice::from_generators(7, fixtures::r8_basis_b2()));
        const int_matrix expected{{1, 0, 0, 0, 0, 1, -1}, {0, 1, 0, 0, 0, 1, 0},
                                  {0, 0, 1, 0, 0, 2, -1}, {0, 0, 0, 1, 0, 2, 0},
                                  {0, 0, 0, 0, 1, 3, -1}, {0, 0, 0, 0, 0, 4, 0}};
        CHECK(d2.basis() == expected);
    }

    SECTION("Delta^3(R_8) equals the published B_3") {
        CHECK(delta_power(r8, 3) ==
              lattice::from_generators(7, fixtures::r8_basis_b3()));
    }

    SECTION("tower property") {
        for (int n : {3, 4, 7, 8, 10, 12}) {
            const quandle q = make_dihedral(n);
            for (auto mode : {power_mode::right, power_mode::two_sided}) {
                lattice prev = delta_power(q, 1, mode);
                for (int k = 2; k <= 5; ++k) {
                    const lattice next = delta_power(q, k, mode);
                    CAPTURE(n, k);
                    CHECK(prev.contains(next));
                    prev = next;
                }
            }
        }
    }

    SECTION("generator economy: right factors j < n/2 suffice for Delta^2") {
        for (int n = 4; n <= 16; n += 2) {
            const quandle q = make_dihedral(n);
            std::vector<std::vector<bigint>> restricted;
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n / 2; ++j)
                    restricted.push_back(ebasis_product(q, i, j));
            CHECK(lattice::from_generators(static_cast<std::size_t>(n) - 1,
                                           restricted) == delta_power(q, 2));
        }
    }
}

TEST_CASE("delta_quotient") {
    const quandle r8 = make_dihedral(8);

    const quotient_report k2 = delta_quotient(r8, 2);
    CHECK(k2.free_rank == 0);
    CHECK(k2.torsion == std::vector<bigint>{4, 4});
    CHECK(k2.order() == 16);

    const quotient_report r3k1 = delta_quotient(make_dihedral(3), 1);
    CHECK(r3k1.free_rank == 0);
    CHECK(r3k1.torsion == std::vector<bigint>{3});

    const quotient_report r4k2 = delta_quotient(make_dihedral(4), 2);
    CHECK(r4k2.free_rank == 0);
    CHECK(r4k2.order() == 4);

    const quotient_report k1 = delta_quotient(r8, 1);
    CHECK(k1.free_rank == 1);
    CHECK(k1.torsion == std::vector<bigint>{4});
}
