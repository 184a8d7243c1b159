#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mlap;
using test_util::random_graph;

TEST_CASE("weighted graphs keep a symmetric hollow weight matrix", "[laplacian]") {
    weighted_graph w(4);
    w.set_weight(1, 3, Rational(-5, 7));
    CHECK(w.w(3, 1) == Rational(-5, 7));
    CHECK_THROWS_AS(w.set_weight(2, 2, Rational(1)), std::invalid_argument);

    const auto l = weighted_laplacian(w);
    for (int i = 0; i < 4; ++i) CHECK(l.row_sum(i) == 0);
    CHECK(l(1, 1) == Rational(-5, 7));
    CHECK(l(1, 3) == Rational(5, 7));
}

TEST_CASE("order bounds", "[laplacian]") {
    CHECK_THROWS_AS(m_adjacency(complete(4), 4), std::invalid_argument);  // m < n required
    CHECK_THROWS_AS(m_adjacency(complete(9), max_laplacian_order + 1), std::invalid_argument);
    CHECK_THROWS_AS(m_laplacian(complete(4), 0), std::invalid_argument);
}

TEST_CASE("order 1 is the classic Laplacian", "[laplacian]") {
    std::mt19937 rng(43);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_graph(2 + t % 7, rng);
        CHECK(m_laplacian(g, 1) ==
              to_rational(classic_matrix(g, classic_kind::laplacian)));
    }
}

TEST_CASE("order 3 cycle weights are the stencil coefficients", "[laplacian]") {
    const auto w = m_adjacency(cycle(7), 3).w;
    CHECK(w(0, 1) == Rational(3, 2));
    CHECK(w(0, 2) == Rational(-3, 20));
    CHECK(w(0, 3) == Rational(1, 90));
    CHECK(w(0, 0) == 0);
}

TEST_CASE("two construction routes for order 2 agree", "[laplacian]") {
    for (const auto& g : enumerate_nonisomorphic(5).collect())
        CHECK(m_laplacian(g, 2) == two_laplacian_direct(g));
    std::mt19937 rng(47);
    for (int t = 0; t < 25; ++t) {
        const auto g = random_graph(3 + t % 7, rng);
        CHECK(m_laplacian(g, 2) == two_laplacian_direct(g));
    }
}

TEST_CASE("m-Laplacian rows sum to zero and the matrix is symmetric", "[laplacian]") {
    std::mt19937 rng(53);
    for (int t = 0; t < 20; ++t) {
        const int n = 4 + t % 6;
        const auto g = random_graph(n, rng);
        for (int m = 1; m <= std::min(3, n - 1); ++m) {
            const auto l = m_laplacian(g, m);
            CHECK(l.is_symmetric());
            for (int i = 0; i < n; ++i) CHECK(l.row_sum(i) == 0);
        }
    }
}

TEST_CASE("the 6-vertex demonstration pair", "[laplacian]") {
    auto sg = integer_scaled(m_laplacian(test_util::demo_g(), 2));
    CHECK(sg.scale == 12);
    CHECK(sg.m == test_util::demo_g_twelve_l2());

    auto sh = integer_scaled(m_laplacian(test_util::demo_h(), 2));
    CHECK(sh.scale == 12);
    CHECK(sh.m == test_util::demo_h_twelve_l2());
}

TEST_CASE("classic matrices", "[laplacian]") {
    const auto g = path_graph(3);
    const auto a = classic_matrix(g, classic_kind::adjacency);
    const auto l = classic_matrix(g, classic_kind::laplacian);
    const auto ql = classic_matrix(g, classic_kind::signless_laplacian);
    CHECK(a(0, 1) == 1);
    CHECK(a(0, 2) == 0);
    CHECK(l(0, 0) == 1);
    CHECK(l(1, 1) == 2);
    CHECK(l(0, 1) == -1);
    CHECK(ql(0, 1) == 1);
    // |L| = D + A and L = D - A, so |L| - L = 2A
    CHECK(ql - l == 2 * a);
}

TEST_CASE("integer scaling clears exactly the denominator lcm", "[laplacian]") {
    const auto one = integer_scaled(m_laplacian(complete(4), 1));
    CHECK(one.scale == 1);

    const auto three = integer_scaled(m_laplacian(cycle(7), 3));
    CHECK(three.scale == 180);  // lcm(2, 20, 90)
}

TEST_CASE("disjoint unions are block diagonal", "[laplacian]") {
    const auto g = cycle(4);
    const auto h = complete(3);
    for (int m : {1, 2}) {
        CHECK(m_laplacian(disjoint_union(g, h), m) ==
              block_diag(m_laplacian(g, m), m_laplacian(h, m)));
    }

    // m may exceed a component's order: its long-path weights vanish, so
    // the block equals the Laplacian of the coefficient-weighted short paths
    const auto u = disjoint_union(complete(2), cycle(5));
    const auto l3 = m_laplacian(u, 3);
    weighted_graph k2_block(2);
    k2_block.set_weight(0, 1, coeff(1, 3));
    CHECK(block_diag(weighted_laplacian(k2_block), m_laplacian(cycle(5), 3)) == l3);
}

TEST_CASE("2-Laplacian of a Cartesian product from its factors", "[laplacian][identity]") {
    std::mt19937 rng(59);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_graph(3 + t % 3, rng);
        const auto h = random_graph(3 + (t / 2) % 3, rng);
        CHECK(two_laplacian_cartesian_identity(g, h) ==
              m_laplacian(cartesian_product(g, h), 2));
    }
    CHECK(two_laplacian_cartesian_identity(cycle(3), cycle(3)) ==
          m_laplacian(cartesian_product(cycle(3), cycle(3)), 2));
    CHECK_THROWS_AS(two_laplacian_cartesian_identity(complete(2), cycle(4)),
                    std::invalid_argument);
}

TEST_CASE("2-Laplacian of the complement from the graph itself", "[laplacian][identity]") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> pick_n(4, 9);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_graph(pick_n(rng), rng);
        CAPTURE(write_graph6(g));
        CHECK(two_laplacian_complement_identity(g) == m_laplacian(complement(g), 2));
    }
    // edge cases: complete -> empty and empty -> complete
    CHECK(two_laplacian_complement_identity(complete(6)) == matrix<Rational>(6, 6));
    CHECK(two_laplacian_complement_identity(empty_graph(6)) == m_laplacian(complete(6), 2));
}
