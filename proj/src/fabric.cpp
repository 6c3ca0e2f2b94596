#include "biofab/fabric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "json.hpp"

#include "biofab/error.hpp"

namespace biofab {

std::size_t EdgeSequence::edge_count() const {
    std::size_t total = 0;
    for (const auto& g : groups) std::visit([&](const auto& group) { total += group.edges.size(); }, g);
    return total;
}

EdgeSequence unfold(const BinaryMatrix& m, const PatternSet& patterns) {
    const int n = static_cast<int>(m.n());
    check_disjoint(patterns, m.n());

    std::map<std::pair<int, int>, std::size_t> triggers;
    for (std::size_t i = 0; i < patterns.size(); ++i) triggers.emplace(patterns[i].first_cell(), i);

    std::vector<char> marked(static_cast<std::size_t>(n) * n, 0);
    EdgeSequence seq;
    for (int r = 0; r < n; ++r) {
        StaircaseGroup stair{r, {}, true};
        for (int c = r + 1; c < n; ++c) {
            if (auto it = triggers.find({r, c}); it != triggers.end()) {
                const Pattern& p = patterns[it->second];
                PatternGroup group{it->second, p, {}};
                for (int pr = p.rows.first; pr <= p.rows.last; ++pr) {
                    const int c_begin = p.kind == PatternKind::Clique ? pr + 1 : p.cols.first;
                    for (int pc = c_begin; pc <= p.cols.last; ++pc) {
                        if (!m(pr, pc)) continue;
                        group.edges.push_back({pr, pc});
                        marked[static_cast<std::size_t>(pr) * n + pc] = 1;
                    }
                }
                if (static_cast<int>(group.edges.size()) != p.present)
                    throw PatternOutOfBounds(std::string(to_string(p.kind)) + " at rows [" +
                                             std::to_string(p.rows.first) + ", " + std::to_string(p.rows.last) +
                                             "] claims " + std::to_string(p.present) + " edges, matrix has " +
                                             std::to_string(group.edges.size()));
                seq.groups.emplace_back(std::move(group));
            }
            if (m(r, c) && !marked[static_cast<std::size_t>(r) * n + c]) stair.edges.push_back({r, c});
        }
        if (!stair.edges.empty()) seq.groups.emplace_back(std::move(stair));
    }
    return seq;
}

Rect annulus_hole(const Rect& outer, HoleFraction fraction) {
    const double scale = std::sqrt(fraction.value());
    const double w = outer.width * scale, h = outer.height * scale;
    return {outer.x + (outer.width - w) / 2, outer.y + (outer.height - h) / 2, w, h};
}

std::size_t FabricLayout::represented_edges() const {
    std::size_t total = 0;
    for (const auto& e : elements) {
        if (const auto* run = std::get_if<StaircaseRun>(&e)) total += run->segments.size();
        if (const auto* c = std::get_if<CliqueGlyph>(&e)) total += static_cast<std::size_t>(c->present);
        if (const auto* b = std::get_if<BicliqueGlyph>(&e)) total += static_cast<std::size_t>(b->present);
    }
    return total;
}

namespace {

class LineExtents {
public:
    explicit LineExtents(std::size_t n)
        : begin_(n, std::numeric_limits<int>::max()), end_(n, std::numeric_limits<int>::min()) {}

    void touch(int row, SlotRange slots) {
        begin_[row] = std::min(begin_[row], slots.begin);
        end_[row] = std::max(end_[row], slots.end());
    }

    VertexLine line(int row) const {
        if (begin_[row] > end_[row]) return {row, 0.0, 0.0};
        return {row, static_cast<double>(begin_[row]), static_cast<double>(end_[row])};
    }

private:
    std::vector<int> begin_, end_;
};

HoleFraction hole_of(const Pattern& p) { return {p.missing, p.capacity()}; }

}  // namespace

FabricLayout layout(const EdgeSequence& seq, const PatternSet& patterns, std::size_t n) {
    FabricLayout out;
    out.n = n;
    out.row_y.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.row_y[k] = static_cast<double>(k);

    LineExtents extents(n);
    std::vector<Element> groups;
    int slot = 0;

    const auto staircase = [&](int anchor, StairDirection dir, bool shaded, std::optional<std::size_t> pattern,
                               const std::vector<Edge>& edges) {
        StaircaseRun run{anchor, dir, shaded, pattern, {slot, static_cast<int>(edges.size())}, {}};
        for (const Edge& e : edges) {
            run.segments.push_back({slot + 0.5, e.i1, e.i2});
            extents.touch(e.i1, {slot, 1});
            extents.touch(e.i2, {slot, 1});
            ++slot;
        }
        groups.emplace_back(std::move(run));
    };

    for (const Group& g : seq.groups) {
        if (const auto* stair = std::get_if<StaircaseGroup>(&g)) {
            staircase(stair->anchor, StairDirection::Down, stair->shaded, std::nullopt, stair->edges);
            continue;
        }
        const auto& pg = std::get<PatternGroup>(g);
        const Pattern& p = pg.pattern;
        if (pg.pattern_index >= patterns.size() || !(patterns[pg.pattern_index] == p))
            throw PatternOutOfBounds("edge sequence refers to a pattern missing from the pattern set");
        switch (p.kind) {
            case PatternKind::Clique: {
                const int side = p.rows.last - p.rows.first;
                CliqueGlyph glyph{pg.pattern_index, p.rows, {slot, side}, {}, {}, hole_of(p), p.present};
                glyph.outer = {static_cast<double>(slot), static_cast<double>(p.rows.first), static_cast<double>(side),
                               static_cast<double>(side)};
                glyph.hole = annulus_hole(glyph.outer, glyph.hole_fraction);
                for (int r = p.rows.first; r <= p.rows.last; ++r) extents.touch(r, glyph.slots);
                slot += side;
                groups.emplace_back(std::move(glyph));
                break;
            }
            case PatternKind::Biclique: {
                const int width = p.cols.size();
                BicliqueGlyph glyph{pg.pattern_index, p.rows, p.cols, {slot, width}, {}, {}, hole_of(p), p.present, {}};
                glyph.outer = {static_cast<double>(slot), static_cast<double>(p.rows.first), static_cast<double>(width),
                               static_cast<double>(p.rows.last - p.rows.first)};
                glyph.hole = annulus_hole(glyph.outer, glyph.hole_fraction);
                for (int r = p.rows.first; r <= p.rows.last; ++r) extents.touch(r, glyph.slots);
                for (int t = 0; t < width; ++t) {
                    glyph.connectors.push_back({slot + t + 0.5, p.rows.last, p.cols.first + t});
                    extents.touch(p.cols.first + t, {slot + t, 1});
                }
                slot += width;
                groups.emplace_back(std::move(glyph));
                break;
            }
            case PatternKind::Star: {
                // Row-major edges: a (1 x k) star comes out by increasing
                // length, a (k x 1) star by decreasing length.
                const bool downward = p.rows.size() == 1;
                const int anchor = downward ? p.rows.first : p.cols.first;
                staircase(anchor, downward ? StairDirection::Down : StairDirection::Up, false, pg.pattern_index,
                          pg.edges);
                break;
            }
        }
    }

    out.slots = slot;
    for (std::size_t k = 0; k < n; ++k) out.elements.emplace_back(extents.line(static_cast<int>(k)));
    for (auto& e : groups) out.elements.push_back(std::move(e));
    return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json rect_json(const Rect& r) { return Json{{"x", r.x}, {"y", r.y}, {"width", r.width}, {"height", r.height}}; }

Json segments_json(const std::vector<Segment>& segments) {
    auto list = Json::array();
    for (const auto& s : segments) list.push_back(Json{{"x", s.x}, {"y_top", s.y_top}, {"y_bottom", s.y_bottom}});
    return list;
}

Json slots_json(SlotRange s) { return Json{s.begin, s.count}; }

Json hole_json(HoleFraction f) { return Json{{"missing", f.missing}, {"capacity", f.capacity}}; }

}  // namespace

std::string layout_to_json(const FabricLayout& layout) {
    Json doc;
    doc["n"] = layout.n;
    doc["slots"] = layout.slots;
    auto elements = Json::array();
    for (const auto& element : layout.elements) {
        Json e;
        if (const auto* v = std::get_if<VertexLine>(&element)) {
            e["type"] = "vertex_line";
            e["row"] = v->row;
            e["x_begin"] = v->x_begin;
            e["x_end"] = v->x_end;
        } else if (const auto* c = std::get_if<CliqueGlyph>(&element)) {
            e["type"] = "clique";
            e["pattern"] = c->pattern_index;
            e["rows"] = Json{c->rows.first, c->rows.last};
            e["slots"] = slots_json(c->slots);
            e["outer"] = rect_json(c->outer);
            e["hole"] = rect_json(c->hole);
            e["hole_fraction"] = hole_json(c->hole_fraction);
            e["present"] = c->present;
        } else if (const auto* b = std::get_if<BicliqueGlyph>(&element)) {
            e["type"] = "biclique";
            e["pattern"] = b->pattern_index;
            e["rows"] = Json{b->rows.first, b->rows.last};
            e["cols"] = Json{b->cols.first, b->cols.last};
            e["slots"] = slots_json(b->slots);
            e["outer"] = rect_json(b->outer);
            e["hole"] = rect_json(b->hole);
            e["hole_fraction"] = hole_json(b->hole_fraction);
            e["present"] = b->present;
            e["connectors"] = segments_json(b->connectors);
        } else {
            const auto& s = std::get<StaircaseRun>(element);
            e["type"] = "staircase";
            e["anchor"] = s.anchor;
            e["direction"] = s.direction == StairDirection::Down ? "down" : "up";
            e["shaded"] = s.shaded;
            e["pattern"] = s.pattern_index ? Json(*s.pattern_index) : Json(nullptr);
            e["slots"] = slots_json(s.slots);
            e["segments"] = segments_json(s.segments);
        }
        elements.push_back(std::move(e));
    }
    doc["elements"] = std::move(elements);
    return doc.dump();
}

}  // namespace biofab
