#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "biofab/matrix.hpp"

namespace biofab {

enum class PatternKind { Clique, Biclique, Star };

std::string_view to_string(PatternKind kind);
// Throws Error for unknown names.
PatternKind pattern_kind_from_string(std::string_view name);

// Inclusive index range of matrix rows or columns.
struct Span {
    int first = 0;
    int last = 0;

    int size() const noexcept { return last - first + 1; }
    bool contains(int i) const noexcept { return first <= i && i <= last; }
    friend auto operator<=>(const Span&, const Span&) = default;
};

// Rectangular submatrix of the ordered adjacency matrix. Cliques sit on the
// diagonal (rows == cols); bicliques and stars lie strictly above it.
struct Pattern {
    PatternKind kind = PatternKind::Clique;
    Span rows;
    Span cols;
    int present = 0;
    int missing = 0;

    // Number of cells (edges) the pattern can hold.
    std::int64_t capacity() const noexcept;
    double density() const noexcept;
    // Matrix cell at which unfolding emits the pattern.
    std::pair<int, int> first_cell() const noexcept;
    // Whether upper-triangle cell (r, c), r < c, belongs to the pattern.
    bool covers(int r, int c) const noexcept;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

using PatternSet = std::vector<Pattern>;

// Purity thresholds in [0, 1]; larger values admit less noise.
//  tau:   minimum fraction of present cells in the submatrix.
//  sigma: minimum fraction of present cells in every row and column of it.
struct PurityParams {
    double sigma = 0.5;
    double tau = 0.95;
};

// Smallest accepted shapes.
inline constexpr int kMinCliqueSize = 3;
inline constexpr int kMinBicliqueSide = 2;
inline constexpr int kMinStarLeaves = 3;

// Slack applied to every threshold comparison (count >= fraction * total).
inline constexpr double kThresholdSlack = 1e-9;

// Throws Error when a pattern violates its kind's shape invariants or lies
// outside an n x n matrix.
void validate_pattern(const Pattern& p, std::size_t n);

// All maximal submatrices meeting the purity predicate, canonically sorted.
// Rectangles lying inside a clique candidate's block are omitted.
std::vector<Pattern> enumerate_candidates(const BinaryMatrix& m, PurityParams params);

// Maximum-weight set of cliques with pairwise disjoint diagonal intervals,
// weight = present. Ties prefer fewer cliques, then lexicographically smaller
// starting rows. Non-clique entries are ignored.
std::vector<Pattern> select_cliques(const std::vector<Pattern>& candidates);

// Greedy disjoint selection of bicliques and stars by present - missing,
// never overlapping `chosen_cliques` or each other. Clique entries in
// `candidates` are ignored.
std::vector<Pattern> select_rectangles(const std::vector<Pattern>& candidates,
                                       const std::vector<Pattern>& chosen_cliques);

// enumerate -> select cliques -> select rectangles; sorted by position.
PatternSet detect(const BinaryMatrix& m, PurityParams params);

// Throws OverlapDetected when two patterns share an upper-triangle cell.
void check_disjoint(const PatternSet& patterns, std::size_t n);

}  // namespace biofab
