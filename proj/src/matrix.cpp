#include "biofab/matrix.hpp"

#include <algorithm>

#include "biofab/error.hpp"
#include "biofab/kernels.hpp"

namespace biofab {

BitGrid::BitGrid(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void BitGrid::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::uint64_t& word = bits_[r * words_ + c / 64];
    word = value ? (word | mask) : (word & ~mask);
}

std::size_t BitGrid::count() const {
    return static_cast<std::size_t>(kernels::active().popcount(bits_));
}

VertexOrdering::VertexOrdering(std::vector<Vertex> perm) : perm_(std::move(perm)) {
    std::vector<char> seen(perm_.size(), 0);
    for (Vertex v : perm_) {
        if (v < 0 || static_cast<std::size_t>(v) >= perm_.size())
            throw InvalidPermutation("index " + std::to_string(v) + " outside [0, " +
                                     std::to_string(perm_.size()) + ")");
        if (seen[v]) throw InvalidPermutation("index " + std::to_string(v) + " repeated");
        seen[v] = 1;
    }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    return VertexOrdering(std::move(perm));
}

std::vector<int> VertexOrdering::positions() const {
    std::vector<int> pos(perm_.size());
    for (std::size_t k = 0; k < perm_.size(); ++k) pos[perm_[k]] = static_cast<int>(k);
    return pos;
}

BinaryMatrix::BinaryMatrix(BitGrid grid) : grid_(std::move(grid)) {
    const std::size_t n = grid_.n();
    for (std::size_t r = 0; r < n; ++r) {
        if (grid_.get(r, r)) throw DimensionMismatch("diagonal cell " + std::to_string(r) + " is set");
        for (std::size_t c = r + 1; c < n; ++c)
            if (grid_.get(r, c) != grid_.get(c, r))
                throw DimensionMismatch("matrix is not symmetric at (" + std::to_string(r) + ", " +
                                        std::to_string(c) + ")");
    }
}

BinaryMatrix adjacency(const Graph& graph, const VertexOrdering& ordering) {
    if (ordering.n() != graph.n())
        throw DimensionMismatch("ordering has " + std::to_string(ordering.n()) + " entries, graph has " +
                                std::to_string(graph.n()) + " vertices");
    const auto pos = ordering.positions();
    BitGrid grid(graph.n());
    for (auto [u, v] : graph.edges()) {
        grid.set(pos[u], pos[v]);
        grid.set(pos[v], pos[u]);
    }
    return BinaryMatrix(std::move(grid));
}

double morans_i_unclamped(const BitGrid& grid) {
    const std::size_t n = grid.n();
    if (n < 2) throw DegenerateMatrix("Moran's I needs n >= 2, got n = " + std::to_string(n));
    const auto& k = kernels::active();

    // Sufficient statistics of the 0/1 image: ones, rook pairs of ones, and
    // ones on the border (border cells have fewer neighbours).
    std::uint64_t ones = 0, horizontal = 0, vertical = 0, border = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const auto row = grid.row(r);
        ones += k.popcount(row);
        horizontal += k.adjacent_pairs(row);
        if (r + 1 < n) vertical += k.and_popcount(row, grid.row(r + 1));
        border += static_cast<std::uint64_t>(grid.get(r, 0)) + grid.get(r, n - 1);
    }
    border += k.popcount(grid.row(0)) + k.popcount(grid.row(n - 1));

    const double cells = static_cast<double>(n) * static_cast<double>(n);
    const double mean = static_cast<double>(ones) / cells;
    const double variance_sum = static_cast<double>(ones) - static_cast<double>(ones) * mean;
    if (ones == 0 || ones == n * n) return 0.0;

    const double pair_weight = 4.0 * static_cast<double>(n) * static_cast<double>(n - 1);
    // Sum over ordered neighbour pairs (c, d) of x_c x_d, and of x_c + x_d.
    const double both = 2.0 * static_cast<double>(horizontal + vertical);
    const double degree_weighted = 4.0 * static_cast<double>(ones) - static_cast<double>(border);
    const double cross = both - 2.0 * mean * degree_weighted + pair_weight * mean * mean;
    return (cells / pair_weight) * cross / variance_sum;
}

double morans_i(const BitGrid& grid) { return std::clamp(morans_i_unclamped(grid), -1.0, 1.0); }

double morans_i(const BinaryMatrix& m) { return morans_i(m.grid()); }

}  // namespace biofab
