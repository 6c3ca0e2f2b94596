#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "biofab/error.hpp"
#include "biofab/graph_io.hpp"
#include "biofab/patterns.hpp"
#include "biofab/seriation.hpp"

using namespace biofab;

namespace {

BinaryMatrix identity_matrix(const Graph& g) { return adjacency(g, VertexOrdering::identity(g.n())); }

Pattern clique(int a, int b, int present) {
    const int k = b - a + 1;
    return {PatternKind::Clique, {a, b}, {a, b}, present, k * (k - 1) / 2 - present};
}

Pattern rect(int r0, int r1, int c0, int c1, int present) {
    const int h = r1 - r0 + 1, w = c1 - c0 + 1;
    const auto kind = (h == 1 || w == 1) ? PatternKind::Star : PatternKind::Biclique;
    return {kind, {r0, r1}, {c0, c1}, present, h * w - present};
}

long total_weight(const std::vector<Pattern>& ps) {
    long w = 0;
    for (const auto& p : ps) w += p.present;
    return w;
}

}  // namespace

TEST_CASE("perfect K4 is a single clique candidate") {
    const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto c = enumerate_candidates(identity_matrix(k4), {1.0, 1.0});
    REQUIRE(c.size() == 1);
    CHECK(c[0] == clique(0, 3, 6));
}

TEST_CASE("perfect star row is a single star candidate") {
    const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const auto c = enumerate_candidates(identity_matrix(star), {1.0, 1.0});
    REQUIRE(c.size() == 1);
    CHECK(c[0].kind == PatternKind::Star);
    CHECK(c[0].rows == Span{0, 0});
    CHECK(c[0].cols == Span{1, 5});
    CHECK(c[0].present == 5);
}

TEST_CASE("candidate enumeration equals brute force") {
    std::mt19937_64 rng(1234);
    const std::vector<PurityParams> settings{{0.5, 0.8}, {0.3, 0.85}, {0.0, 0.9}, {1.0, 1.0}, {0.6, 0.5}};
    for (int trial = 0; trial < 300; ++trial) {
        const int n = trial < 100 ? 6 : 4 + static_cast<int>(rng() % 9);
        const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        const Graph g = oracle::random_graph(n, p, rng);
        const auto perm = oracle::random_perm(n, rng);
        const PurityParams params = trial < 100 ? PurityParams{0.5, 0.8} : settings[trial % settings.size()];
        auto expected = oracle::Brute{oracle::dense(g, perm), params.sigma, params.tau}.candidates();
        auto got = enumerate_candidates(adjacency(g, VertexOrdering(perm)), params);
        auto key = [](const Pattern& a, const Pattern& b) {
            return std::tie(a.rows, a.cols, a.kind) < std::tie(b.rows, b.cols, b.kind);
        };
        std::sort(expected.begin(), expected.end(), key);
        std::sort(got.begin(), got.end(), key);
        CAPTURE(trial);
        REQUIRE(got == expected);
    }
}

TEST_CASE("enumerate rejects purity values outside [0, 1]") {
    CHECK_THROWS_AS(enumerate_candidates(BinaryMatrix(BitGrid(3)), {1.5, 0.5}), Error);
    CHECK_THROWS_AS(enumerate_candidates(BinaryMatrix(BitGrid(3)), {0.5, -0.1}), Error);
}

TEST_CASE("clique selection examples") {
    CHECK(select_cliques({clique(0, 2, 3), clique(3, 5, 3)}) == std::vector<Pattern>{clique(0, 2, 3), clique(3, 5, 3)});
    CHECK(total_weight(select_cliques({clique(0, 2, 3), clique(3, 5, 3)})) == 6);

    Pattern wide = clique(0, 4, 8), left = clique(0, 2, 3), right = clique(3, 4, 1);
    CHECK(select_cliques({left, right, wide}) == std::vector<Pattern>{wide});

    Pattern outer = clique(0, 5, 7), inner = clique(1, 3, 3);
    inner.present = 6;  // weight only; nested intervals conflict
    inner.missing = -3;
    CHECK(select_cliques({inner, outer}) == std::vector<Pattern>{outer});
}

TEST_CASE("clique selection tie-breaks") {
    // Equal weight: one clique beats two.
    CHECK(select_cliques({clique(0, 1, 1), clique(2, 3, 1), Pattern{PatternKind::Clique, {0, 3}, {0, 3}, 2, 4}}) ==
          std::vector<Pattern>{Pattern{PatternKind::Clique, {0, 3}, {0, 3}, 2, 4}});
    // Equal weight and count: earlier start wins.
    CHECK(select_cliques({clique(1, 3, 3), clique(0, 2, 3)}) == std::vector<Pattern>{clique(0, 2, 3)});
    // Non-clique candidates are ignored.
    CHECK(select_cliques({rect(0, 1, 2, 3, 4)}).empty());
}

TEST_CASE("clique DP equals subset brute force") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 8);
        std::vector<Pattern> cands;
        for (int i = 0; i < m; ++i) {
            const int a = static_cast<int>(rng() % 15);
            const int b = a + 2 + static_cast<int>(rng() % 5);
            const int k = b - a + 1;
            cands.push_back(clique(a, b, 1 + static_cast<int>(rng() % (k * (k - 1) / 2))));
        }
        const auto chosen = select_cliques(cands);
        CHECK(total_weight(chosen) == oracle::best_disjoint_interval_weight(cands));
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                CHECK((chosen[i].rows.last < chosen[j].rows.first || chosen[j].rows.last < chosen[i].rows.first));
    }
}

TEST_CASE("rectangle selection") {
    SUBCASE("no conflict") {
        const Pattern b = rect(0, 1, 4, 5, 4);
        CHECK(select_rectangles({b}, {clique(2, 3, 1)}) == std::vector<Pattern>{b});
    }
    SUBCASE("overlap with a chosen clique's block is rejected") {
        const Pattern inside = rect(0, 1, 3, 5, 6);
        CHECK(select_rectangles({inside}, {clique(0, 5, 15)}).empty());
    }
    SUBCASE("ties prefer more present edges") {
        const Pattern fewer{PatternKind::Biclique, {0, 1}, {2, 3}, 4, 0};  // 4 - 0 = 4
        const Pattern more{PatternKind::Biclique, {0, 2}, {3, 4}, 5, 1};   // 5 - 1 = 4
        const auto out = select_rectangles({fewer, more}, {});
        REQUIRE(out.size() == 1);
        CHECK(out[0] == more);
    }
}

TEST_CASE("greedy keeps the heavier of two overlapping bicliques") {
    const Pattern w5{PatternKind::Biclique, {0, 2}, {3, 5}, 7, 2};  // 7 - 2 = 5
    const Pattern w3{PatternKind::Biclique, {1, 3}, {4, 6}, 6, 3};  // 6 - 3 = 3
    REQUIRE(oracle::cells_overlap(w5, w3));
    const auto out = select_rectangles({w3, w5}, {});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == w5);

    // Subset brute force: the only disjoint subsets are {}, {w5}, {w3}.
    long best = 0;
    const std::vector<std::pair<Pattern, long>> items{{w5, 5}, {w3, 3}};
    for (int mask = 0; mask < 4; ++mask) {
        if (mask == 3 && oracle::cells_overlap(w5, w3)) continue;
        long w = 0;
        for (int i = 0; i < 2; ++i)
            if (mask >> i & 1) w += items[i].second;
        best = std::max(best, w);
    }
    CHECK(best == out[0].present - out[0].missing);
}

TEST_CASE("detect on trivial inputs") {
    CHECK(detect(BinaryMatrix(BitGrid(5)), {0.5, 0.95}).empty());
    CHECK(detect(BinaryMatrix(BitGrid(1)), {0.5, 0.95}).empty());
}

TEST_CASE("detect invariants on random graphs") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 30);
        const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.1, 0.6)(rng), rng);
        const BinaryMatrix m = adjacency(g, heuristic_order(g, trial).ordering);
        for (PurityParams params : {PurityParams{0.3, 0.85}, PurityParams{0.5, 0.95}, PurityParams{1.0, 1.0}}) {
            const PatternSet ps = detect(m, params);
            CHECK_NOTHROW(check_disjoint(ps, m.n()));
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const Pattern& p = ps[i];
                CHECK(p.density() >= params.tau - 1e-9);
                for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK(!oracle::cells_overlap(p, ps[j]));
                if (params.sigma == 1.0 && params.tau == 1.0) CHECK(p.missing == 0);
            }
            CHECK(detect(m, params) == ps);
        }
    }
}

TEST_CASE("check_disjoint reports overlaps") {
    CHECK_THROWS_AS(check_disjoint({clique(0, 3, 6), rect(0, 1, 2, 4, 6)}, 6), OverlapDetected);
    CHECK_NOTHROW(check_disjoint({clique(0, 2, 3), rect(0, 1, 3, 4, 4)}, 6));
    CHECK_THROWS_AS(check_disjoint({rect(0, 1, 1, 4, 8)}, 6), PatternOutOfBounds);
}

TEST_CASE("ZKC at sigma 0.5, tau 0.95 finds cliques and bicliques") {
    const Graph zkc = load_graph_file(GraphFormat::EdgeList, BIOFAB_DATA_DIR "/zkc.txt");
    const BinaryMatrix m = adjacency(zkc, heuristic_order(zkc, 1).ordering);
    const PatternSet ps = detect(m, {0.5, 0.95});
    int cliques = 0, bicliques = 0;
    for (const auto& p : ps) {
        cliques += p.kind == PatternKind::Clique;
        bicliques += p.kind == PatternKind::Biclique;
    }
    CHECK(cliques >= 1);
    CHECK(bicliques >= 1);
}

TEST_CASE("raising tau does not add noise on bundled data") {
    for (const char* name : {"/zkc.txt", "/mis.txt"}) {
        const Graph g = load_graph_file(GraphFormat::EdgeList, std::string(BIOFAB_DATA_DIR) + name);
        for (std::uint64_t seed : {1u, 2u}) {
            const BinaryMatrix m = adjacency(g, heuristic_order(g, seed).ordering);
            for (double sigma : {0.3, 0.5}) {
                long loose = 0, tight = 0;
                for (const auto& p : detect(m, {sigma, 0.85})) loose += p.missing;
                for (const auto& p : detect(m, {sigma, 0.95})) tight += p.missing;
                CAPTURE(name);
                CAPTURE(seed);
                CAPTURE(sigma);
                CHECK(tight <= loose);
            }
        }
    }
}
