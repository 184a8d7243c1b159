#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace mlap;

TEST_CASE("target shapes are classified from raw multisets", "[synthesis]") {
    const auto odd = target_spectrum::parse({0, 1, 1, 2, 2});
    CHECK(odd.shape == target_spectrum::shape_kind::odd);
    CHECK(odd.m() == 2);
    CHECK(odd.n() == 5);
    CHECK(odd.paired == std::vector<double>{1, 2});

    const auto even = target_spectrum::parse({5, 0, 1, 1, 2, 2});
    CHECK(even.shape == target_spectrum::shape_kind::even);
    CHECK(even.m() == 3);
    CHECK(even.n() == 6);
    CHECK(even.unpaired == 5);

    // the free value may sit anywhere in the sorted order
    const auto low = target_spectrum::parse({0, -3, 1, 1, 2, 2});
    CHECK(low.unpaired == -3);
    CHECK(low.paired == std::vector<double>{1, 2});

    CHECK_THROWS_AS(target_spectrum::parse({1, 1, 2, 2, 3}), std::invalid_argument);  // no zero
    CHECK_THROWS_AS(target_spectrum::parse({0, 1, 2, 3, 4}), std::invalid_argument);  // unpaired
    CHECK_THROWS_AS(target_spectrum::parse({0, 1}), std::invalid_argument);           // n < 3
    CHECK_THROWS_AS(target_spectrum::odd_target({}), std::invalid_argument);
}

TEST_CASE("the sine system", "[synthesis]") {
    const auto z1 = sine_system_matrix(3, 1);
    CHECK(z1(0, 0) == Catch::Approx(0.75));

    const auto z2 = sine_system_matrix(5, 2);
    const double pi = std::acos(-1.0);
    CHECK(z2(0, 1) == Catch::Approx(std::pow(std::sin(2 * pi / 5), 2)));
    CHECK(z2(1, 0) == z2(0, 1));

    CHECK_THROWS_AS(sine_system_matrix(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(sine_system_matrix(3, 0), std::invalid_argument);
}

TEST_CASE("known realizations", "[synthesis]") {
    SECTION("K_3 from its Laplacian spectrum") {
        const auto rep = build_weighted_from_spectrum(target_spectrum::parse({0, 3, 3}));
        CHECK(rep.weights.size() == 1);
        CHECK(rep.weights[0] == Catch::Approx(1.0));
        CHECK(to_double(rep.graph.w(0, 1)) == Catch::Approx(1.0));
        CHECK(rep.max_residual < 1e-12);
        CHECK_FALSE(rep.negated);
    }
    SECTION("the zero spectrum gives the empty weighting") {
        const auto rep = build_weighted_from_spectrum(target_spectrum::odd_target({0, 0}));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(to_double(rep.graph.w(i, j)) == 0.0);
    }
    SECTION("an even-shape worked example") {
        const auto rep =
            build_weighted_from_spectrum(target_spectrum::parse({1, 1, 2, 2, 0, 5}));
        CHECK(rep.graph.n() == 6);
        CHECK(rep.max_residual < 1e-8);
        // the antipodal weight is a single edge, carried at doubled strength
        CHECK(rep.graph.w(0, 3) == rep.graph.w(1, 4));
    }
}

TEST_CASE("random targets reconstruct their spectra", "[synthesis]") {
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> lam(-10, 10);
    std::uniform_int_distribution<int> order(1, 6);

    for (int t = 0; t < 25; ++t) {
        std::vector<double> pairs(order(rng));
        for (auto& x : pairs) x = lam(rng);
        const auto rep = build_weighted_from_spectrum(target_spectrum::odd_target(pairs));
        CAPTURE(pairs);
        CHECK(rep.max_residual <= 1e-8);
        CHECK(rep.condition >= 1.0);
    }

    for (int t = 0; t < 10; ++t) {
        std::vector<double> pairs(order(rng));
        for (auto& x : pairs) x = lam(rng);
        const auto rep =
            build_weighted_from_spectrum(target_spectrum::even_target(pairs, lam(rng)));
        CHECK(rep.max_residual <= 1e-8);
    }
}

TEST_CASE("realized weighted graphs stay exact objects", "[synthesis]") {
    // double -> Rational conversion is exact, so the weighted Laplacian is a
    // bona fide rational matrix: rows sum to zero exactly
    const auto rep = build_weighted_from_spectrum(target_spectrum::parse({0, 1, 1, 4, 4}));
    const auto l = weighted_laplacian(rep.graph);
    for (int i = 0; i < 5; ++i) CHECK(l.row_sum(i) == 0);
    CHECK(l.is_symmetric());
}

TEST_CASE("spectra embed into one-larger graphs by vertex deletion", "[synthesis]") {
    SECTION("singleton zero") {
        const auto rep = embed_spectrum({0});
        CHECK((rep.principal_contains || rep.rebuilt_contains));
    }
    SECTION("free pairs, including negatives") {
        for (const auto& lambda :
             {std::vector<double>{1, 3}, {-1, 2}, {2.5, 2.5, -0.75}, {4, 1, 0.5, -2, 3}}) {
            CAPTURE(lambda);
            const auto rep = embed_spectrum(lambda);
            CHECK((rep.principal_contains || rep.rebuilt_contains));
            CHECK(std::min(rep.principal_residual, rep.rebuilt_residual) <= 1e-7);
        }
    }
    SECTION("principal submatrix interlaces the parent") {
        const auto rep = embed_spectrum({1, 3, 7});
        const auto parent = eig_symmetric(weighted_laplacian(rep.parent));
        REQUIRE(parent.size() == rep.principal_spectrum.size() + 1);
        for (std::size_t i = 0; i < rep.principal_spectrum.size(); ++i) {
            CHECK(parent[i] <= rep.principal_spectrum[i] + 1e-9);
            CHECK(rep.principal_spectrum[i] <= parent[i + 1] + 1e-9);
        }
    }
    CHECK_THROWS_AS(embed_spectrum({}), std::invalid_argument);
}

TEST_CASE("random embeddings satisfy containment", "[synthesis]") {
    std::mt19937 rng(97);
    std::uniform_real_distribution<double> lam(-10, 10);
    std::uniform_int_distribution<int> order(1, 5);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> lambda(order(rng));
        for (auto& x : lambda) x = lam(rng);
        const auto rep = embed_spectrum(lambda);
        CHECK(std::min(rep.principal_residual, rep.rebuilt_residual) <= 1e-7);
    }
}
