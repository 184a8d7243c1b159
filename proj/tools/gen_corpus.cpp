// Dev utility: writes the exhaustive non-isomorphic graph6 corpus for n = 8
// (12346 graphs) so the 8-vertex census rows can run. The library's public
// enumerator is capped at n = 7; this tool reuses the same orbit-marking scan
// with a larger bitmap (2^28 bits) and takes on the order of a minute.
// n = 9 is out of reach for this approach (the bitmap alone would be 8 GiB);
// 9-vertex corpora must come from published collections.

#include "mlap/census.hpp"
#include "mlap/enumerate.hpp"

#include <cstdio>
#include <string>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: gen_corpus OUTPUT_DIR   (writes OUTPUT_DIR/graph8.g6)\n");
        return 2;
    }
    const int n = 8;
    std::fprintf(stderr, "enumerating all non-isomorphic graphs on %d vertices...\n", n);
    const auto graphs = mlap::enumerate_nonisomorphic_eager(n, /*max_n=*/8);
    const auto want = mlap::expected_graph_count(n);
    if (!want || static_cast<long long>(graphs.size()) != *want) {
        std::fprintf(stderr, "enumeration produced %zu graphs, expected %lld — refusing to write\n",
                     graphs.size(), want ? *want : -1);
        return 1;
    }
    const std::string path = std::string(argv[1]) + "/graph8.g6";
    mlap::write_graph6_file(path, graphs);
    std::fprintf(stderr, "wrote %zu graphs to %s\n", graphs.size(), path.c_str());
    return 0;
}
