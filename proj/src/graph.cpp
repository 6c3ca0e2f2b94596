#include "biofab/graph.hpp"

#include <algorithm>

#include "biofab/error.hpp"

namespace biofab {

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges,
             std::optional<std::vector<std::string>> labels)
    : n_(n), labels_(std::move(labels)) {
    if (labels_ && labels_->size() != n_)
        throw Error("label count " + std::to_string(labels_->size()) + " does not match n = " +
                    std::to_string(n_));
    const std::size_t raw = edges.size();
    edges_.reserve(raw);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
            throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        if (u == v) continue;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    dropped_ = raw - edges_.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::vector<std::vector<Vertex>> Graph::adjacency_lists() const {
    std::vector<std::vector<Vertex>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::string Graph::label(Vertex v) const {
    if (labels_) return (*labels_)[v];
    return std::to_string(v);
}

}  // namespace biofab
