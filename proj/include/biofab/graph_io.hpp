#pragma once

#include <string>
#include <string_view>

#include "biofab/graph.hpp"
#include "biofab/matrix.hpp"
#include "biofab/patterns.hpp"

namespace biofab {

enum class GraphFormat { EdgeList, MatrixMarket };

// Edge list: one edge per line as two whitespace-separated tokens, `#` lines
// ignored. If every token is a non-negative integer the tokens are vertex
// indices (n = largest index + 1); otherwise every token is a label and
// vertices are numbered by first appearance.
//
// MatrixMarket: coordinate format (pattern, or with values which are
// ignored); 1-based indices; the matrix must be square.
//
// Self-loops and duplicates are dropped; see Graph::dropped().
// Throws ParseError or EmptyGraph.
Graph load_graph(GraphFormat format, std::string_view bytes);

// Reads a file and dispatches on `format`; throws Error if unreadable.
Graph load_graph_file(GraphFormat format, const std::string& path);

std::string save_edge_list(const Graph& graph);

struct PipelineResult {
    std::size_t n = 0;
    VertexOrdering order;
    PatternSet patterns;

    friend bool operator==(const PipelineResult&, const PipelineResult&) = default;
};

// {"n":..,"order":[..],"patterns":[{"kind","rows":[r0,r1],"cols":[c0,c1],"present","missing"}]}
std::string save_json(const VertexOrdering& ordering, const PatternSet& patterns);

// Inverse of save_json. Throws ParseError on malformed documents, Error on
// inconsistent content.
PipelineResult load_json(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace biofab
