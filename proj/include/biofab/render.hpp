#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biofab/fabric.hpp"
#include "biofab/matrix.hpp"
#include "biofab/patterns.hpp"

namespace biofab {

struct StyleConfig {
    double unit = 12.0;  // pixels per grid unit
    std::vector<std::string> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                     "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
    std::string gray = "#b0b0b0";
    std::string line_color = "#404040";
    std::string cell_color = "#202020";
    double vertex_stroke = 1.0;
    double edge_stroke = 1.5;
    double pattern_stroke = 2.0;
    double font_size = 10.0;
    bool show_labels = false;

    // Throws Error unless unit > 0 and the palette is nonempty.
    void validate() const;
    const std::string& color(std::size_t pattern_index) const { return palette[pattern_index % palette.size()]; }
};

// Standalone SVG 1.1 document. `labels` are indexed by matrix position and
// drawn in a left margin when style.show_labels is set.
std::string render_fabric_svg(const FabricLayout& layout, const StyleConfig& style,
                              const std::optional<std::vector<std::string>>& labels = std::nullopt);

// Ordered matrix as a grid of filled cells, one outlined rectangle per
// pattern.
std::string render_matrix_svg(const BinaryMatrix& m, const PatternSet& patterns, const StyleConfig& style,
                              const std::optional<std::vector<std::string>>& labels = std::nullopt);

}  // namespace biofab
