#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

using namespace mlap;
using test_util::random_graph;

TEST_CASE("simple_graph stores an undirected loop-free adjacency", "[graph]") {
    simple_graph g(4);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.has_edge(2, 0));
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.has_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(simple_graph(0), std::invalid_argument);

    g.remove_edge(0, 2);
    CHECK_FALSE(g.has_edge(2, 0));

    const auto a = g.adjacency_matrix();
    CHECK(a.is_symmetric());
    CHECK(a.trace() == 0);
}

TEST_CASE("standard constructions have the expected shapes", "[graph]") {
    CHECK(complete(5).edge_count() == 10);
    CHECK(cycle(6).edge_count() == 6);
    CHECK(path_graph(6).edge_count() == 5);
    CHECK(star_graph(7).degree(0) == 6);
    CHECK(star_graph(7).degree(3) == 1);
    CHECK(complete_bipartite(1, 3) == star_graph(4));
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("circulant jump validation and degree rule", "[graph]") {
    CHECK(circulant(5, {1, 2}) == complete(5));
    CHECK(circulant(6, {1, 2}) == antiprism(3));
    CHECK(circulant(6, {1, 3}) == moebius_ladder(3));

    // 2 per ordinary jump, 1 for the antipodal jump at even n
    const auto g = circulant(8, {1, 4});
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    const auto h = circulant(7, {2, 3});
    for (int v = 0; v < 7; ++v) CHECK(h.degree(v) == 4);

    CHECK_THROWS_AS(circulant(6, {0}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(6, {4}), std::invalid_argument);   // > n/2
    CHECK_THROWS_AS(circulant(6, {1, 1}), std::invalid_argument);
}

TEST_CASE("odd prisms are circulants", "[graph]") {
    CHECK(canonical_graph6(prism(3)) == canonical_graph6(circulant(6, {2, 3})));
    CHECK(canonical_graph6(prism(5)) == canonical_graph6(circulant(10, {2, 5})));
    CHECK(prism(4).edge_count() == 12);
    // the cube Y_4 is bipartite, so no odd-cycle circulant matches it
    CHECK(canonical_graph6(prism(4)) != canonical_graph6(circulant(8, {2, 4})));
}

TEST_CASE("graph operators", "[graph]") {
    const auto g = cycle(4);
    const auto h = complete(3);

    SECTION("disjoint union concatenates vertex ranges") {
        const auto u = disjoint_union(g, h);
        REQUIRE(u.n() == 7);
        CHECK(u.edge_count() == g.edge_count() + h.edge_count());
        CHECK(u.has_edge(0, 1));
        CHECK(u.has_edge(4, 6));
        CHECK_FALSE(u.has_edge(3, 4));
    }
    SECTION("cartesian product of two edges is a 4-cycle") {
        const auto p = cartesian_product(complete(2), complete(2));
        CHECK(canonical_graph6(p) == canonical_graph6(cycle(4)));
        CHECK(cartesian_product(g, h).edge_count() ==
              g.edge_count() * h.n() + h.edge_count() * g.n());
    }
    SECTION("tensor product of two edges is a perfect matching") {
        const auto t = tensor_product(complete(2), complete(2));
        CHECK(canonical_graph6(t) == canonical_graph6(disjoint_union(complete(2), complete(2))));
    }
    SECTION("complement") {
        CHECK(complement(complete(5)) == empty_graph(5));
        std::mt19937 rng(7);
        for (int t = 0; t < 25; ++t) {
            const auto r = random_graph(2 + t % 8, rng);
            CHECK(complement(complement(r)) == r);
        }
    }
    SECTION("vertex deletion") {
        CHECK(delete_vertex(cycle(4), 0) == path_graph(3));
        CHECK(delete_vertex(complete(5), 2) == complete(4));
        CHECK_THROWS_AS(delete_vertex(complete(1), 0), std::invalid_argument);
    }
}

TEST_CASE("graph6 known vectors", "[graph6]") {
    CHECK(parse_graph6("@").n() == 1);
    CHECK(parse_graph6("A?") == empty_graph(2));
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(write_graph6(complete(3)) == "Bw");
    CHECK(write_graph6(empty_graph(2)) == "A?");
}

TEST_CASE("graph6 round trips across all three length forms", "[graph6]") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_graph(1 + t % 20, rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    // long form: n > 62 switches to the '~' + 18-bit length header
    const auto big = random_graph(70, rng, 0.1);
    const auto line = write_graph6(big);
    CHECK(line[0] == '~');
    CHECK(parse_graph6(line) == big);
}

TEST_CASE("graph6 rejects malformed input", "[graph6]") {
    CHECK_THROWS_AS(parse_graph6(""), graph6_error);
    CHECK_THROWS_AS(parse_graph6("B"), graph6_error);    // missing edge bytes
    CHECK_THROWS_AS(parse_graph6("Bww"), graph6_error);  // trailing bytes
    CHECK_THROWS_AS(parse_graph6("~"), graph6_error);    // truncated size header
    CHECK_THROWS_AS(parse_graph6("B\x1f"), graph6_error);  // byte below '?'
    CHECK_THROWS_AS(parse_graph6("B{"), graph6_error);   // nonzero padding bits

    try {
        parse_graph6("B\x1f");
        FAIL("expected graph6_error");
    } catch (const graph6_error& e) {
        CHECK(e.byte_offset == 1);
    }
}

TEST_CASE("graph6 file io tolerates the standard header line", "[graph6]") {
    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "mlap_g6_io_test.g6").string();
    {
        std::ofstream f(path);
        f << ">>graph6<<Bw\r\nA_\n\nDQc\n";
    }
    const auto graphs = read_graph6_file(path);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == complete(3));
    CHECK(graphs[1] == complete(2));
    CHECK(graphs[2].n() == 5);

    write_graph6_file(path, graphs);
    CHECK(read_graph6_file(path).size() == 3);
    fs::remove(path);
}

TEST_CASE("edge list format round trips", "[graph6]") {
    const auto g = test_util::demo_g();
    CHECK(parse_edge_list(write_edge_list(g)) == g);

    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "mlap_edges_test.txt").string();
    {
        std::ofstream f(path);
        f << write_edge_list(g);
    }
    CHECK(read_graph_file(path) == g);  // sniffed as an edge list, not graph6
    fs::remove(path);
}

TEST_CASE("enumeration produces the known counts of non-isomorphic graphs", "[enumerate]") {
    const long long expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long long>(enumerate_nonisomorphic(n).collect().size()) ==
              expected[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_nonisomorphic_eager(8), capability_error);
}

TEST_CASE("enumeration yields exactly the lex-minimal representatives", "[enumerate]") {
    // Two independent canonicalizations agree: the orbit scan emits a graph
    // only if no permutation produces a smaller adjacency bit-string, and
    // canonical_graph6 finds that minimum by branch and bound.
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const auto& g : enumerate_nonisomorphic(n).collect()) {
            const auto canon = canonical_graph6(g);
            CHECK(canon == write_graph6(g));
            CHECK(seen.insert(canon).second);  // pairwise non-isomorphic
        }
    }
}

TEST_CASE("canonical form is invariant under relabeling", "[enumerate]") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 6;
        const auto g = random_graph(n, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_graph6(g) == canonical_graph6(g.permuted(perm)));
    }
}

TEST_CASE("graph streams read lazily from files", "[enumerate]") {
    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "mlap_stream_test.g6").string();
    write_graph6_file(path, enumerate_nonisomorphic(4).collect());

    auto stream = graph_stream::from_file(path);
    std::size_t count = 0;
    while (auto g = stream.next()) {
        CHECK(g->n() == 4);
        ++count;
    }
    CHECK(count == 11);
    CHECK_THROWS(graph_stream::from_file(path + ".missing"));
    fs::remove(path);
}
