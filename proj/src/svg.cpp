#include <algorithm>
#include <string>

#include <fmt/format.h>

#include "biofab/error.hpp"
#include "biofab/render.hpp"

namespace biofab {
namespace {

// Fixed three-decimal formatting with trailing zeros removed, so output
// bytes do not depend on locale or shortest-round-trip heuristics.
std::string num(double v) {
    std::string s = fmt::format("{:.3f}", v);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Canvas {
    double left = 0;
    double top = 0;
    double unit = 1;
    double x(double gx) const { return left + gx * unit; }
    double y(double gy) const { return top + gy * unit; }
};

double label_margin(const StyleConfig& style, const std::optional<std::vector<std::string>>& labels) {
    if (!style.show_labels || !labels) return 0.0;
    std::size_t longest = 0;
    for (const auto& l : *labels) longest = std::max(longest, l.size());
    return static_cast<double>(longest) * style.font_size * 0.6 + style.font_size;
}

void open_svg(std::string& out, double width, double height) {
    out += fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"#ffffff\"/>\n",
        num(width), num(height));
}

void draw_labels(std::string& out, const Canvas& canvas, const StyleConfig& style,
                 const std::optional<std::vector<std::string>>& labels, double centre_offset) {
    if (!style.show_labels || !labels) return;
    out += fmt::format("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"end\">\n",
                       num(style.font_size));
    for (std::size_t k = 0; k < labels->size(); ++k) {
        out += fmt::format("<text x=\"{}\" y=\"{}\" dominant-baseline=\"middle\">{}</text>\n",
                           num(canvas.left - style.font_size * 0.5),
                           num(canvas.y(static_cast<double>(k) + centre_offset)), escape((*labels)[k]));
    }
    out += "</g>\n";
}

std::string annulus_path(const Canvas& c, const Rect& outer, const Rect& hole) {
    const auto sub = [&](const Rect& r) {
        return fmt::format("M{} {}H{}V{}H{}Z", num(c.x(r.x)), num(c.y(r.y)), num(c.x(r.x + r.width)),
                           num(c.y(r.y + r.height)), num(c.x(r.x)));
    };
    return sub(outer) + " " + sub(hole);
}

void draw_segment(std::string& out, const Canvas& c, const Segment& s, const std::string& color, double stroke) {
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{3}\" stroke-width=\"{4}\"/>\n",
                       num(c.x(s.x)), num(c.y(s.y_top)), num(c.y(s.y_bottom)), color, num(stroke));
}

}  // namespace

void StyleConfig::validate() const {
    if (!(unit > 0)) throw Error("style unit must be positive");
    if (palette.empty()) throw Error("style palette must not be empty");
}

std::string render_fabric_svg(const FabricLayout& layout, const StyleConfig& style,
                              const std::optional<std::vector<std::string>>& labels) {
    style.validate();
    Canvas canvas;
    canvas.unit = style.unit;
    canvas.left = style.unit + label_margin(style, labels);
    canvas.top = style.unit;
    const double width = canvas.left + (layout.slots + 1) * style.unit;
    const double height = canvas.top + static_cast<double>(layout.n) * style.unit;

    std::string out;
    open_svg(out, width, std::max(height, canvas.top + style.unit));
    draw_labels(out, canvas, style, labels, 0.0);

    out += fmt::format("<g class=\"vertex-lines\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\">\n",
                       style.line_color, num(style.vertex_stroke));
    for (const auto& element : layout.elements) {
        if (const auto* v = std::get_if<VertexLine>(&element)) {
            const double y = canvas.y(layout.row_y[v->row]);
            out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", num(canvas.x(v->x_begin)), num(y),
                               num(canvas.x(v->x_end)), num(y));
        }
    }
    out += "</g>\n";

    out += "<g class=\"motifs\">\n";
    for (const auto& element : layout.elements) {
        if (const auto* cg = std::get_if<CliqueGlyph>(&element)) {
            out += fmt::format("<path class=\"clique\" d=\"{}\" fill=\"{}\" fill-rule=\"evenodd\"/>\n",
                               annulus_path(canvas, cg->outer, cg->hole), style.color(cg->pattern_index));
        } else if (const auto* bg = std::get_if<BicliqueGlyph>(&element)) {
            const auto& color = style.color(bg->pattern_index);
            out += fmt::format("<path class=\"biclique\" d=\"{}\" fill=\"{}\" fill-rule=\"evenodd\"/>\n",
                               annulus_path(canvas, bg->outer, bg->hole), color);
            for (const auto& s : bg->connectors) draw_segment(out, canvas, s, color, style.edge_stroke);
        } else if (const auto* run = std::get_if<StaircaseRun>(&element)) {
            const std::string& color = run->pattern_index ? style.color(*run->pattern_index) : style.gray;
            for (const auto& s : run->segments) draw_segment(out, canvas, s, color, style.edge_stroke);
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_matrix_svg(const BinaryMatrix& m, const PatternSet& patterns, const StyleConfig& style,
                              const std::optional<std::vector<std::string>>& labels) {
    style.validate();
    const std::size_t n = m.n();
    Canvas canvas;
    canvas.unit = style.unit;
    canvas.left = style.unit + label_margin(style, labels);
    canvas.top = style.unit;
    const double side = static_cast<double>(n) * style.unit;

    std::string out;
    open_svg(out, canvas.left + side + style.unit, canvas.top + side + style.unit);
    draw_labels(out, canvas, style, labels, 0.5);
    out += fmt::format(
        "<rect class=\"frame\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" "
        "stroke-width=\"{}\"/>\n",
        num(canvas.x(0)), num(canvas.y(0)), num(side), num(side), style.line_color, num(style.vertex_stroke));

    out += fmt::format("<g class=\"cells\" fill=\"{}\">\n", style.cell_color);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m(r, c))
                out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>\n",
                                   num(canvas.x(static_cast<double>(c))), num(canvas.y(static_cast<double>(r))),
                                   num(style.unit), num(style.unit));
    out += "</g>\n";

    out += fmt::format("<g class=\"patterns\" fill=\"none\" stroke-width=\"{}\">\n", num(style.pattern_stroke));
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const Pattern& p = patterns[i];
        out += fmt::format("<rect class=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke=\"{}\"/>\n",
                           to_string(p.kind), num(canvas.x(p.cols.first)), num(canvas.y(p.rows.first)),
                           num(p.cols.size() * style.unit), num(p.rows.size() * style.unit), style.color(i));
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace biofab
