#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's algorithms; only its plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "biofab/graph.hpp"
#include "biofab/patterns.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline biofab::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<biofab::Vertex, biofab::Vertex>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return biofab::Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline std::vector<biofab::Vertex> random_perm(int n, std::mt19937_64& rng) {
    std::vector<biofab::Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline Grid dense(const biofab::Graph& g, const std::vector<biofab::Vertex>& perm) {
    const int n = static_cast<int>(g.n());
    Grid m(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c && g.has_edge(perm[r], perm[c])) m[r][c] = 1;
    return m;
}

// Moran's I straight from the definition: every cell an observation, rook
// neighbours, W = number of ordered neighbour pairs. Unclamped.
inline double morans_i(const Grid& x) {
    const int n = static_cast<int>(x.size());
    double mean = 0;
    for (const auto& row : x)
        for (int v : row) mean += v;
    mean /= static_cast<double>(n) * n;
    double num = 0, den = 0, w = 0;
    const int dr[] = {1, -1, 0, 0};
    const int dc[] = {0, 0, 1, -1};
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            den += (x[r][c] - mean) * (x[r][c] - mean);
            for (int k = 0; k < 4; ++k) {
                const int rr = r + dr[k], cc = c + dc[k];
                if (rr < 0 || cc < 0 || rr >= n || cc >= n) continue;
                w += 1;
                num += (x[r][c] - mean) * (x[rr][cc] - mean);
            }
        }
    }
    if (den == 0) return 0.0;
    return (static_cast<double>(n) * n / w) * num / den;
}

inline bool meets(long count, long total, double fraction) {
    return static_cast<double>(count) >= fraction * static_cast<double>(total) - biofab::kThresholdSlack;
}

struct Brute {
    const Grid& m;
    double sigma, tau;

    int n() const { return static_cast<int>(m.size()); }

    bool clique(int a, int b) const {
        if (a < 0 || b >= n() || b - a + 1 < biofab::kMinCliqueSize) return false;
        const int k = b - a + 1;
        long present = 0;
        for (int r = a; r <= b; ++r)
            for (int c = r + 1; c <= b; ++c) present += m[r][c];
        if (present == 0 || !meets(present, static_cast<long>(k) * (k - 1) / 2, tau)) return false;
        for (int r = a; r <= b; ++r) {
            long line = 0;
            for (int c = a; c <= b; ++c)
                if (c != r) line += m[r][c];
            if (!meets(line, k - 1, sigma)) return false;
        }
        return true;
    }

    bool rectangle(int r0, int r1, int c0, int c1) const {
        if (r0 < 0 || c1 >= n() || r0 > r1 || c0 > c1 || c0 <= r1) return false;
        const int h = r1 - r0 + 1, w = c1 - c0 + 1;
        const bool shape = (h == 1) ? w >= 3 : (w == 1) ? h >= 3 : (h >= 2 && w >= 2);
        if (!shape) return false;
        long present = 0;
        for (int r = r0; r <= r1; ++r)
            for (int c = c0; c <= c1; ++c) present += m[r][c];
        if (present == 0 || !meets(present, static_cast<long>(h) * w, tau)) return false;
        for (int r = r0; r <= r1; ++r) {
            long line = 0;
            for (int c = c0; c <= c1; ++c) line += m[r][c];
            if (!meets(line, w, sigma)) return false;
        }
        for (int c = c0; c <= c1; ++c) {
            long line = 0;
            for (int r = r0; r <= r1; ++r) line += m[r][c];
            if (!meets(line, h, sigma)) return false;
        }
        return true;
    }

    std::vector<biofab::Pattern> candidates() const {
        std::vector<biofab::Pattern> out;
        for (int a = 0; a < n(); ++a)
            for (int b = a; b < n(); ++b) {
                if (!clique(a, b) || clique(a - 1, b) || clique(a, b + 1)) continue;
                biofab::Pattern p;
                p.kind = biofab::PatternKind::Clique;
                p.rows = p.cols = {a, b};
                for (int r = a; r <= b; ++r)
                    for (int c = r + 1; c <= b; ++c) p.present += m[r][c];
                const int k = b - a + 1;
                p.missing = k * (k - 1) / 2 - p.present;
                out.push_back(p);
            }
        for (int r0 = 0; r0 < n(); ++r0)
            for (int r1 = r0; r1 < n(); ++r1)
                for (int c0 = r1 + 1; c0 < n(); ++c0)
                    for (int c1 = c0; c1 < n(); ++c1) {
                        if (!rectangle(r0, r1, c0, c1)) continue;
                        bool inside_clique = false;
                        for (const auto& q : out)
                            if (q.kind == biofab::PatternKind::Clique && q.rows.first <= r0 && c1 <= q.rows.last)
                                inside_clique = true;
                        if (inside_clique) continue;
                        if (rectangle(r0 - 1, r1, c0, c1) || rectangle(r0, r1 + 1, c0, c1) ||
                            rectangle(r0, r1, c0 - 1, c1) || rectangle(r0, r1, c0, c1 + 1))
                            continue;
                        biofab::Pattern p;
                        const int h = r1 - r0 + 1, w = c1 - c0 + 1;
                        p.kind = (h == 1 || w == 1) ? biofab::PatternKind::Star : biofab::PatternKind::Biclique;
                        p.rows = {r0, r1};
                        p.cols = {c0, c1};
                        for (int r = r0; r <= r1; ++r)
                            for (int c = c0; c <= c1; ++c) p.present += m[r][c];
                        p.missing = h * w - p.present;
                        out.push_back(p);
                    }
        return out;
    }
};

// Maximum total `present` over subsets of cliques with disjoint intervals.
inline long best_disjoint_interval_weight(const std::vector<biofab::Pattern>& cliques) {
    const std::size_t m = cliques.size();
    long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        long weight = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            weight += cliques[i].present;
            for (std::size_t j = i + 1; j < m; ++j)
                if ((mask >> j & 1) && !(cliques[i].rows.last < cliques[j].rows.first ||
                                         cliques[j].rows.last < cliques[i].rows.first))
                    ok = false;
        }
        if (ok) best = std::max(best, weight);
    }
    return best;
}

// Whether two patterns share an upper-triangle cell, by cell enumeration.
inline bool cells_overlap(const biofab::Pattern& a, const biofab::Pattern& b) {
    for (int r = a.rows.first; r <= a.rows.last; ++r)
        for (int c = a.cols.first; c <= a.cols.last; ++c) {
            if (r >= c) continue;
            if (b.rows.contains(r) && b.cols.contains(c)) return true;
        }
    return false;
}

// Exact TSP tour (0-based cities) over a full distance matrix, by enumeration
// with city 0 fixed first.
inline std::vector<int> brute_force_tour(const std::vector<std::vector<long>>& d) {
    const int n = static_cast<int>(d.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    long best_len = std::numeric_limits<long>::max();
    do {
        long len = 0;
        for (int k = 0; k < n; ++k) len += d[perm[k]][perm[(k + 1) % n]];
        if (len < best_len) {
            best_len = len;
            best = perm;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

}  // namespace oracle
