#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biofab/graph.hpp"
#include "biofab/matrix.hpp"

namespace biofab {

inline constexpr std::size_t kMaxExhaustiveN = 10;
// Nearest-neighbour starts tried by the heuristic (capped at n).
inline constexpr std::size_t kHeuristicStarts = 16;

namespace ordering_method {
struct Identity {};
struct Given {
    std::vector<Vertex> perm;
};
struct Exhaustive {};
struct Heuristic {
    std::uint64_t seed = 1;
};
}  // namespace ordering_method

using OrderingMethod = std::variant<ordering_method::Identity, ordering_method::Given,
                                    ordering_method::Exhaustive, ordering_method::Heuristic>;

struct OrderingResult {
    VertexOrdering ordering;
    double morans_i = 0.0;
};

// Throws EmptyGraph, InvalidPermutation (Given), TooLargeForExhaustive.
OrderingResult order(const Graph& graph, const OrderingMethod& method);

// Moran's I of adjacency(graph, ordering) expressed through vertex
// statistics, which makes single reversal moves O(1) to score.
//
// For a symmetric zero-diagonal image the horizontal and vertical rook pairs
// of ones both equal the sum of common-neighbour counts of consecutive
// vertices, and the border ones only depend on the first and last vertex.
// Hence I is an increasing affine function of the integer
//   score = n^2 * sum_k common(p[k], p[k+1]) + ones * (deg(p[0]) + deg(p[n-1]))
// where ones = 2|E|.
class MoranObjective {
public:
    explicit MoranObjective(const Graph& graph);

    std::size_t n() const noexcept { return n_; }
    std::int64_t score(std::span<const Vertex> perm) const;
    // Score change from reversing perm[i..j], i < j.
    std::int64_t reversal_delta(std::span<const Vertex> perm, std::size_t i, std::size_t j) const;
    double morans_i(std::int64_t score) const;

    int common(Vertex u, Vertex v) const { return common_[static_cast<std::size_t>(u) * n_ + v]; }
    int degree(Vertex v) const { return degree_[v]; }

private:
    std::size_t n_;
    std::int64_t ones_;
    std::vector<int> common_;
    std::vector<int> degree_;
};

// Hamming distance between adjacency rows of u and v, ignoring columns u and v.
std::vector<int> row_dissimilarity(const Graph& graph);

struct HeuristicTrace {
    OrderingResult nearest_neighbor;
    OrderingResult two_opt;
    OrderingResult final;
};

// Seeded nearest-neighbour path on row dissimilarity, 2-opt to a local
// optimum, then steepest-ascent reversals on Moran's I starting from the better
// of the two paths. The same pipeline is repeated from further start vertices
// and the best local optimum is returned; the trace's first two stages belong
// to the seeded start. Deterministic for a given seed.
OrderingResult heuristic_order(const Graph& graph, std::uint64_t seed);
HeuristicTrace heuristic_order_traced(const Graph& graph, std::uint64_t seed);

// TSPLIB95 EXPLICIT / FULL_MATRIX instance over row dissimilarity plus one
// dummy city (index n + 1) at distance 0 from every vertex, so an optimal tour
// cut at the dummy is an optimal open path. Requires n >= 2.
std::string export_tsplib(const Graph& graph, std::string_view name = "biofab");

// Reads a tour (TOUR_SECTION terminated by -1, or a bare list of 1-based
// cities) over n vertices with or without the dummy city n + 1. The result is
// the path starting after the dummy, reversed if needed so the first vertex
// has the smaller index of the two ends. Throws MalformedTour or
// TourLengthMismatch.
VertexOrdering import_tour(std::string_view bytes, std::size_t n);

}  // namespace biofab
