#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biofab/graph.hpp"

namespace biofab {

// Square n x n bit grid; row r is a run of 64-bit words, column c in word
// c / 64 at bit c % 64. Padding bits are always zero.
class BitGrid {
public:
    BitGrid() = default;
    explicit BitGrid(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value = true);

    std::span<const std::uint64_t> row(std::size_t r) const {
        return {bits_.data() + r * words_, words_};
    }

    std::size_t count() const;

    friend bool operator==(const BitGrid&, const BitGrid&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Permutation of [0, n); perm[k] is the original vertex shown at row and
// column k.
class VertexOrdering {
public:
    VertexOrdering() = default;
    // Throws InvalidPermutation unless `perm` is a bijection on [0, n).
    explicit VertexOrdering(std::vector<Vertex> perm);

    static VertexOrdering identity(std::size_t n);

    std::size_t n() const noexcept { return perm_.size(); }
    Vertex operator[](std::size_t k) const { return perm_[k]; }
    const std::vector<Vertex>& perm() const noexcept { return perm_; }
    // position()[v] = row of original vertex v.
    std::vector<int> positions() const;

    friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

private:
    std::vector<Vertex> perm_;
};

// Symmetric 0/1 adjacency matrix with a zero diagonal.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    // Throws DimensionMismatch if `grid` is not symmetric or has a set
    // diagonal cell.
    explicit BinaryMatrix(BitGrid grid);

    std::size_t n() const noexcept { return grid_.n(); }
    bool operator()(std::size_t r, std::size_t c) const { return grid_.get(r, c); }
    const BitGrid& grid() const noexcept { return grid_; }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    BitGrid grid_;
};

// cells[r][c] = 1 iff {perm[r], perm[c]} is an edge.
BinaryMatrix adjacency(const Graph& graph, const VertexOrdering& ordering);

// Moran's I of the grid image with rook (4-)neighbourhoods, every cell an
// observation including the diagonal. Zero-variance grids score 0; the result
// is clamped to [-1, 1]. Throws DegenerateMatrix for n < 2.
double morans_i(const BitGrid& grid);
double morans_i(const BinaryMatrix& m);

// Same statistic without clamping.
double morans_i_unclamped(const BitGrid& grid);

}  // namespace biofab
