#include "biofab/seriation.hpp"

#include <algorithm>
#include <random>

#include "biofab/error.hpp"
#include "biofab/kernels.hpp"

namespace biofab {
namespace {

BitGrid identity_grid(const Graph& graph) {
    BitGrid grid(graph.n());
    for (auto [u, v] : graph.edges()) {
        grid.set(u, v);
        grid.set(v, u);
    }
    return grid;
}

std::vector<Vertex> nearest_neighbor_path(const std::vector<int>& dist, std::size_t n, Vertex start) {
    std::vector<Vertex> path;
    path.reserve(n);
    std::vector<char> used(n, 0);
    Vertex current = start;
    path.push_back(current);
    used[current] = 1;
    while (path.size() < n) {
        Vertex best = -1;
        int best_d = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            const int d = dist[static_cast<std::size_t>(current) * n + v];
            if (best < 0 || d < best_d) {
                best = static_cast<Vertex>(v);
                best_d = d;
            }
        }
        path.push_back(best);
        used[best] = 1;
        current = best;
    }
    return path;
}

// Best-improvement 2-opt for the open path: a move reverses perm[i..j] and
// only the (up to) two boundary links change.
void two_opt(std::vector<Vertex>& perm, const std::vector<int>& dist) {
    const std::size_t n = perm.size();
    auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a) * n + b]; };
    for (;;) {
        long best_delta = 0;
        std::size_t best_i = 0, best_j = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                long delta = 0;
                if (i > 0) delta += d(perm[i - 1], perm[j]) - d(perm[i - 1], perm[i]);
                if (j + 1 < n) delta += d(perm[i], perm[j + 1]) - d(perm[j], perm[j + 1]);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_delta >= 0) return;
        std::reverse(perm.begin() + static_cast<std::ptrdiff_t>(best_i),
                     perm.begin() + static_cast<std::ptrdiff_t>(best_j) + 1);
    }
}

// Steepest ascent on the Moran score over segment reversals; j == i + 1 is an
// adjacent transposition.
void hill_climb(std::vector<Vertex>& perm, const MoranObjective& objective) {
    const std::size_t n = perm.size();
    for (;;) {
        std::int64_t best_delta = 0;
        std::size_t best_i = 0, best_j = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::int64_t delta = objective.reversal_delta(perm, i, j);
                if (delta > best_delta) {
                    best_delta = delta;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_delta <= 0) return;
        std::reverse(perm.begin() + static_cast<std::ptrdiff_t>(best_i),
                     perm.begin() + static_cast<std::ptrdiff_t>(best_j) + 1);
    }
}

OrderingResult scored(std::vector<Vertex> perm, const MoranObjective& objective) {
    const double value = perm.size() < 2 ? 0.0 : objective.morans_i(objective.score(perm));
    return {VertexOrdering(std::move(perm)), value};
}

OrderingResult exhaustive_order(const Graph& graph) {
    const std::size_t n = graph.n();
    if (n > kMaxExhaustiveN) throw TooLargeForExhaustive(n);
    const MoranObjective objective(graph);
    std::vector<Vertex> perm = VertexOrdering::identity(n).perm();
    if (n < 2) return scored(perm, objective);
    std::vector<Vertex> best = perm;
    std::int64_t best_score = objective.score(perm);
    // next_permutation walks in lexicographic order, so keeping only strict
    // improvements yields the lexicographically smallest argmax.
    while (std::next_permutation(perm.begin(), perm.end())) {
        const std::int64_t s = objective.score(perm);
        if (s > best_score) {
            best_score = s;
            best = perm;
        }
    }
    return scored(std::move(best), objective);
}

}  // namespace

MoranObjective::MoranObjective(const Graph& graph)
    : n_(graph.n()), ones_(2 * static_cast<std::int64_t>(graph.edge_count())), common_(n_ * n_, 0), degree_(n_, 0) {
    const BitGrid grid = identity_grid(graph);
    const auto& k = kernels::active();
    for (std::size_t u = 0; u < n_; ++u) {
        degree_[u] = static_cast<int>(k.popcount(grid.row(u)));
        for (std::size_t v = u + 1; v < n_; ++v) {
            const int c = static_cast<int>(k.and_popcount(grid.row(u), grid.row(v)));
            common_[u * n_ + v] = c;
            common_[v * n_ + u] = c;
        }
    }
}

std::int64_t MoranObjective::score(std::span<const Vertex> perm) const {
    const std::size_t n = perm.size();
    if (n == 0) return 0;
    std::int64_t chain = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) chain += common(perm[k], perm[k + 1]);
    const auto cells = static_cast<std::int64_t>(n_ * n_);
    return cells * chain + ones_ * (degree(perm.front()) + degree(perm.back()));
}

std::int64_t MoranObjective::reversal_delta(std::span<const Vertex> perm, std::size_t i, std::size_t j) const {
    const std::size_t n = perm.size();
    const auto cells = static_cast<std::int64_t>(n_ * n_);
    std::int64_t chain = 0;
    if (i > 0) chain += common(perm[i - 1], perm[j]) - common(perm[i - 1], perm[i]);
    if (j + 1 < n) chain += common(perm[i], perm[j + 1]) - common(perm[j], perm[j + 1]);
    std::int64_t ends = 0;
    if (i == 0 && j + 1 < n) ends += degree(perm[j]) - degree(perm[0]);
    if (j + 1 == n && i > 0) ends += degree(perm[i]) - degree(perm[n - 1]);
    return cells * chain + ones_ * ends;
}

double MoranObjective::morans_i(std::int64_t score) const {
    if (n_ < 2) throw DegenerateMatrix("Moran's I needs n >= 2");
    const double cells = static_cast<double>(n_) * static_cast<double>(n_);
    const double ones = static_cast<double>(ones_);
    if (ones_ == 0 || ones == cells) return 0.0;
    const double mean = ones / cells;
    const double pair_weight = 4.0 * static_cast<double>(n_) * static_cast<double>(n_ - 1);
    const double cross = 4.0 * static_cast<double>(score) / cells - 8.0 * mean * ones + pair_weight * mean * mean;
    const double value = (cells / pair_weight) * cross / (ones - ones * mean);
    return std::clamp(value, -1.0, 1.0);
}

std::vector<int> row_dissimilarity(const Graph& graph) {
    const std::size_t n = graph.n();
    const BitGrid grid = identity_grid(graph);
    const auto& k = kernels::active();
    std::vector<int> dist(n * n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            // Columns u and v differ exactly when u ~ v; drop both.
            const int d = static_cast<int>(k.xor_popcount(grid.row(u), grid.row(v))) - 2 * grid.get(u, v);
            dist[u * n + v] = d;
            dist[v * n + u] = d;
        }
    }
    return dist;
}

HeuristicTrace heuristic_order_traced(const Graph& graph, std::uint64_t seed) {
    const std::size_t n = graph.n();
    if (n == 0) throw EmptyGraph();
    const MoranObjective objective(graph);
    if (n < 2) {
        auto single = scored(VertexOrdering::identity(n).perm(), objective);
        return {single, single, single};
    }
    const std::vector<int> dist = row_dissimilarity(graph);
    const auto first = static_cast<Vertex>(std::mt19937_64(seed)() % n);

    std::vector<Vertex> nn = nearest_neighbor_path(dist, n, first);
    std::vector<Vertex> path = nn;
    two_opt(path, dist);

    const auto climb_from = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::vector<Vertex> climbed = objective.score(a) > objective.score(b) ? a : b;
        hill_climb(climbed, objective);
        return climbed;
    };
    std::vector<Vertex> best = climb_from(nn, path);
    std::int64_t best_score = objective.score(best);

    // Further starts walk on from the seeded vertex; the first strictly better
    // local optimum wins.
    const std::size_t starts = std::min(n, kHeuristicStarts);
    for (std::size_t k = 1; k < starts; ++k) {
        const auto start = static_cast<Vertex>((static_cast<std::size_t>(first) + k) % n);
        std::vector<Vertex> other_nn = nearest_neighbor_path(dist, n, start);
        std::vector<Vertex> other_path = other_nn;
        two_opt(other_path, dist);
        std::vector<Vertex> climbed = climb_from(other_nn, other_path);
        if (const std::int64_t s = objective.score(climbed); s > best_score) {
            best_score = s;
            best = std::move(climbed);
        }
    }

    return {scored(std::move(nn), objective), scored(std::move(path), objective),
            scored(std::move(best), objective)};
}

OrderingResult heuristic_order(const Graph& graph, std::uint64_t seed) {
    return heuristic_order_traced(graph, seed).final;
}

OrderingResult order(const Graph& graph, const OrderingMethod& method) {
    if (graph.n() == 0) throw EmptyGraph();
    struct Visitor {
        const Graph& graph;
        OrderingResult operator()(const ordering_method::Identity&) const {
            return scored(VertexOrdering::identity(graph.n()).perm(), MoranObjective(graph));
        }
        OrderingResult operator()(const ordering_method::Given& given) const {
            if (given.perm.size() != graph.n())
                throw InvalidPermutation("permutation has " + std::to_string(given.perm.size()) +
                                         " entries, graph has " + std::to_string(graph.n()) + " vertices");
            VertexOrdering checked(given.perm);
            return scored(checked.perm(), MoranObjective(graph));
        }
        OrderingResult operator()(const ordering_method::Exhaustive&) const { return exhaustive_order(graph); }
        OrderingResult operator()(const ordering_method::Heuristic& h) const {
            return heuristic_order(graph, h.seed);
        }
    };
    return std::visit(Visitor{graph}, method);
}

}  // namespace biofab
