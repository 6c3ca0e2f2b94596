#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biofab {

using Vertex = int;

// Undirected, unweighted, simple graph. Edges are stored canonically
// (smaller index first) in sorted order without duplicates or self-loops.
class Graph {
public:
    Graph() = default;

    // Canonicalizes `edges`: orients each pair, drops self-loops and
    // duplicates. Throws Error on out-of-range endpoints or a label list of
    // the wrong size.
    Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
          std::optional<std::vector<std::string>> labels = std::nullopt);

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
    const std::optional<std::vector<std::string>>& labels() const noexcept { return labels_; }

    bool has_edge(Vertex u, Vertex v) const;
    std::vector<std::vector<Vertex>> adjacency_lists() const;

    // Label of vertex v, or its index when the graph is unlabeled.
    std::string label(Vertex v) const;

    // Number of self-loops and duplicate edges discarded during construction.
    std::size_t dropped() const noexcept { return dropped_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::optional<std::vector<std::string>> labels_;
    std::size_t dropped_ = 0;
};

}  // namespace biofab
