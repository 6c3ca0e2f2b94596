#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "biofab/error.hpp"
#include "biofab/graph_io.hpp"
#include "biofab/seriation.hpp"

using namespace biofab;

namespace {

Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

bool contiguous(const VertexOrdering& order, const std::vector<int>& block_of, int block) {
    int first = -1, last = -1, count = 0;
    for (std::size_t k = 0; k < order.n(); ++k) {
        if (block_of[order[k]] != block) continue;
        if (first < 0) first = static_cast<int>(k);
        last = static_cast<int>(k);
        ++count;
    }
    return last - first + 1 == count;
}

}  // namespace

TEST_CASE("complete graph scores the same under every method") {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) e.emplace_back(u, v);
    const Graph k4(4, e);
    const double base = order(k4, ordering_method::Identity{}).morans_i;
    CHECK(order(k4, ordering_method::Exhaustive{}).morans_i == doctest::Approx(base));
    CHECK(order(k4, ordering_method::Heuristic{3}).morans_i == doctest::Approx(base));
    CHECK(order(k4, ordering_method::Given{{3, 1, 0, 2}}).morans_i == doctest::Approx(base));
    // Ties resolve to the smallest permutation.
    CHECK(order(k4, ordering_method::Exhaustive{}).ordering == VertexOrdering::identity(4));
}

TEST_CASE("exhaustive ordering groups two triangles") {
    const Graph g = two_triangles();
    const auto best = order(g, ordering_method::Exhaustive{});
    const std::vector<int> block{0, 0, 0, 1, 1, 1};
    CHECK(contiguous(best.ordering, block, 0));
    CHECK(contiguous(best.ordering, block, 1));
    const double interleaved = morans_i(adjacency(g, VertexOrdering({0, 3, 1, 4, 2, 5})));
    CHECK(best.morans_i > interleaved);
}

TEST_CASE("exhaustive ordering is the lexicographically first argmax") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(n, 0.45, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        double best = -2;
        std::vector<Vertex> arg;
        do {
            const double v = oracle::morans_i(oracle::dense(g, perm));
            if (v > best + 1e-12) {
                best = v;
                arg = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        const auto result = order(g, ordering_method::Exhaustive{});
        CHECK(result.morans_i == doctest::Approx(std::clamp(best, -1.0, 1.0)).epsilon(1e-10));
        CHECK(result.ordering.perm() == arg);
    }
}

TEST_CASE("order guards") {
    CHECK_THROWS_AS(order(Graph(11, {{0, 1}}), ordering_method::Exhaustive{}), TooLargeForExhaustive);
    CHECK_THROWS_AS(order(Graph(3, {{0, 1}}), ordering_method::Given{{0, 1}}), InvalidPermutation);
    CHECK_THROWS_AS(order(Graph(3, {{0, 1}}), ordering_method::Given{{0, 1, 1}}), InvalidPermutation);
    CHECK_THROWS_AS(order(Graph(), ordering_method::Identity{}), EmptyGraph);
    CHECK(order(Graph(1, {}), ordering_method::Heuristic{1}).ordering == VertexOrdering::identity(1));
}

TEST_CASE("closed-form objective matches the matrix statistic") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 30);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const MoranObjective objective(g);
        auto perm = oracle::random_perm(n, rng);
        const auto score = objective.score(perm);
        REQUIRE(objective.morans_i(score) ==
                doctest::Approx(std::clamp(oracle::morans_i(oracle::dense(g, perm)), -1.0, 1.0)).epsilon(1e-10));
        for (int move = 0; move < 10 && n >= 2; ++move) {
            std::size_t i = rng() % n, j = rng() % n;
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            auto reversed = perm;
            std::reverse(reversed.begin() + i, reversed.begin() + j + 1);
            CHECK(objective.reversal_delta(perm, i, j) == objective.score(reversed) - score);
        }
    }
}

TEST_CASE("row dissimilarity is the Hamming distance without the pair's own columns") {
    std::mt19937_64 rng(2);
    const int n = 17;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const auto d = row_dissimilarity(g);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int expected = 0;
            for (int c = 0; c < n; ++c)
                if (c != u && c != v) expected += g.has_edge(u, c) != g.has_edge(v, c);
            CHECK(d[u * n + v] == expected);
        }
}

TEST_CASE("heuristic never loses to its own stages and is deterministic") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 40);
        const Graph g = oracle::random_graph(n, 0.2, rng);
        const auto trace = heuristic_order_traced(g, trial);
        CHECK(trace.final.morans_i >= trace.two_opt.morans_i - 1e-12);
        CHECK(trace.final.morans_i >= trace.nearest_neighbor.morans_i - 1e-12);
        CHECK(heuristic_order(g, trial).ordering == trace.final.ordering);
        CHECK(trace.final.morans_i == doctest::Approx(morans_i(adjacency(g, trace.final.ordering))).epsilon(1e-10));
    }
}

TEST_CASE("heuristic on isolated vertices scores zero") {
    const auto result = heuristic_order(Graph(6, {}), 4);
    CHECK(result.morans_i == 0.0);
    CHECK(result.ordering.n() == 6);
}

TEST_CASE("heuristic beats the identity order on ZKC") {
    const Graph zkc = load_graph_file(GraphFormat::EdgeList, BIOFAB_DATA_DIR "/zkc.txt");
    const double identity = order(zkc, ordering_method::Identity{}).morans_i;
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(heuristic_order(zkc, seed).morans_i >= identity);
}

TEST_CASE("heuristic recovers two planted blocks") {
    std::mt19937_64 rng(99);
    std::bernoulli_distribution inside(0.9), across(0.05);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v)
            if ((u < 8) == (v < 8) ? inside(rng) : across(rng)) e.emplace_back(u, v);
    // Hide the blocks behind a random relabeling.
    const auto relabel = oracle::random_perm(16, rng);
    std::vector<std::pair<Vertex, Vertex>> hidden;
    std::vector<int> block(16);
    for (auto [u, v] : e) hidden.emplace_back(relabel[u], relabel[v]);
    for (int v = 0; v < 16; ++v) block[relabel[v]] = v < 8 ? 0 : 1;
    const Graph g(16, hidden);

    int both = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto result = heuristic_order(g, seed);
        both += contiguous(result.ordering, block, 0) && contiguous(result.ordering, block, 1);
    }
    CHECK(both >= 18);
}

TEST_CASE("TSPLIB export adds a dummy city") {
    const Graph path(3, {{0, 1}, {1, 2}});
    const std::string tsp = export_tsplib(path);
    CHECK(tsp.find("DIMENSION: 4\n") != std::string::npos);
    CHECK(tsp.find("EDGE_WEIGHT_TYPE: EXPLICIT\n") != std::string::npos);
    CHECK(tsp.find("EDGE_WEIGHT_FORMAT: FULL_MATRIX\n") != std::string::npos);
    // d(0,2) = 0 (both see only vertex 1); d(0,1) = d(1,2) = 1 (column of the third vertex).
    CHECK(tsp.find("EDGE_WEIGHT_SECTION\n0 1 0 0\n1 0 1 0\n0 1 0 0\n0 0 0 0\nEOF\n") != std::string::npos);
    CHECK_THROWS_AS(export_tsplib(Graph(1, {})), Error);
}

TEST_CASE("tour import strips the dummy and normalizes direction") {
    CHECK(import_tour("1 2 3 4", 3) == VertexOrdering({0, 1, 2}));
    CHECK(import_tour("TOUR_SECTION\n2\n4\n3\n1\n-1\nEOF\n", 3) == VertexOrdering({1, 0, 2}));
    CHECK(import_tour("NAME: t\nTYPE: TOUR\nDIMENSION: 4\nTOUR_SECTION\n4 3 1 2 -1\n", 3) == VertexOrdering({1, 0, 2}));
    CHECK(import_tour("3 1 2", 3) == VertexOrdering({1, 0, 2}));
    CHECK_THROWS_AS(import_tour("1 2", 3), TourLengthMismatch);
    CHECK_THROWS_AS(import_tour("1 2 2 4", 3), MalformedTour);
    CHECK_THROWS_AS(import_tour("1 2 x 4", 3), MalformedTour);
    CHECK_THROWS_AS(import_tour("1 2 3 5", 3), MalformedTour);
}

TEST_CASE("TSPLIB round trip through an exact solver") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        std::istringstream in(export_tsplib(g));
        std::string line;
        int dim = 0;
        while (std::getline(in, line) && line != "EDGE_WEIGHT_SECTION")
            if (line.rfind("DIMENSION:", 0) == 0) dim = std::stoi(line.substr(10));
        REQUIRE(dim == n + 1);
        std::vector<std::vector<long>> d(dim, std::vector<long>(dim));
        for (auto& row : d)
            for (auto& x : row) in >> x;
        const auto tour = oracle::brute_force_tour(d);
        std::string text = "TOUR_SECTION\n";
        for (int c : tour) text += std::to_string(c + 1) + "\n";
        text += "-1\nEOF\n";
        const VertexOrdering imported = import_tour(text, n);
        CHECK(imported.n() == static_cast<std::size_t>(n));
        // The open path is optimal for the dissimilarity.
        const auto dist = row_dissimilarity(g);
        long path_len = 0;
        for (int k = 0; k + 1 < n; ++k) path_len += dist[imported[k] * n + imported[k + 1]];
        long tour_len = 0;
        for (int k = 0; k < dim; ++k) tour_len += d[tour[k]][tour[(k + 1) % dim]];
        CHECK(path_len == tour_len);
    }
}
