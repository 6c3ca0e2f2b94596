#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "biofab/matrix.hpp"
#include "biofab/patterns.hpp"

namespace biofab {

// Edge by matrix positions, i1 < i2.
struct Edge {
    int i1 = 0;
    int i2 = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct PatternGroup {
    std::size_t pattern_index = 0;  // into the PatternSet passed to unfold
    Pattern pattern;
    std::vector<Edge> edges;
};

// Non-pattern edges of one matrix row: all share i1 == anchor, sorted by i2.
struct StaircaseGroup {
    int anchor = 0;
    std::vector<Edge> edges;
    bool shaded = true;
};

using Group = std::variant<PatternGroup, StaircaseGroup>;

struct EdgeSequence {
    std::vector<Group> groups;
    std::size_t edge_count() const;
};

// Row-major traversal of the upper triangle. A pattern's edges are emitted as
// one block when its first cell is reached; the row's remaining edges follow
// as one staircase after the row's last pattern. Throws PatternOutOfBounds or
// OverlapDetected for invalid pattern sets.
EdgeSequence unfold(const BinaryMatrix& m, const PatternSet& patterns);

// ---------------------------------------------------------------------------
// Geometry. Units: one grid unit per vertex row and per column slot. Slot s
// spans x in [s, s + 1); edge segments are drawn at the slot centre.

struct Rect {
    double x = 0, y = 0, width = 0, height = 0;
    double area() const noexcept { return width * height; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

struct Segment {
    double x = 0;
    int y_top = 0;
    int y_bottom = 0;
    int length() const noexcept { return y_bottom - y_top; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SlotRange {
    int begin = 0;
    int count = 0;
    int end() const noexcept { return begin + count; }
    friend bool operator==(const SlotRange&, const SlotRange&) = default;
};

// Fraction of missing edges as an exact ratio.
struct HoleFraction {
    std::int64_t missing = 0;
    std::int64_t capacity = 1;
    double value() const noexcept { return static_cast<double>(missing) / static_cast<double>(capacity); }
    friend bool operator==(const HoleFraction&, const HoleFraction&) = default;
};

struct VertexLine {
    int row = 0;
    double x_begin = 0;
    double x_end = 0;
};

// Square annulus over rows [rows.first, rows.last].
struct CliqueGlyph {
    std::size_t pattern_index = 0;
    Span rows;
    SlotRange slots;
    Rect outer;
    Rect hole;
    HoleFraction hole_fraction;
    int present = 0;
};

// Rectangular annulus over the first vertex set with one connector per slot
// dropping to the matching vertex of the second set.
struct BicliqueGlyph {
    std::size_t pattern_index = 0;
    Span rows;
    Span cols;
    SlotRange slots;
    Rect outer;
    Rect hole;
    HoleFraction hole_fraction;
    int present = 0;
    std::vector<Segment> connectors;
};

enum class StairDirection { Down, Up };

// Edge segments sharing the anchor vertex, one per slot. Star patterns carry
// their pattern index; non-pattern runs are shaded.
struct StaircaseRun {
    int anchor = 0;
    StairDirection direction = StairDirection::Down;
    bool shaded = false;
    std::optional<std::size_t> pattern_index;
    SlotRange slots;
    std::vector<Segment> segments;
};

using Element = std::variant<VertexLine, CliqueGlyph, BicliqueGlyph, StaircaseRun>;

struct FabricLayout {
    std::size_t n = 0;
    std::vector<double> row_y;  // by matrix position
    int slots = 0;
    std::vector<Element> elements;  // vertex lines first, then groups in sequence order

    // Edge segments in staircase runs plus present counts of annulus glyphs.
    std::size_t represented_edges() const;
};

// Inner hole of an annulus: centred, same aspect as `outer`, area equal to
// outer area times the hole fraction.
Rect annulus_hole(const Rect& outer, HoleFraction fraction);

FabricLayout layout(const EdgeSequence& seq, const PatternSet& patterns, std::size_t n);

// Scene description consumed by the renderer: {"n","slots","elements":[{"type",..}]}.
std::string layout_to_json(const FabricLayout& layout);

}  // namespace biofab
