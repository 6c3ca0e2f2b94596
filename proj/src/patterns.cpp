#include "biofab/patterns.hpp"

#include <algorithm>
#include <tuple>

#include "biofab/error.hpp"

namespace biofab {
namespace {

bool meets(std::int64_t count, std::int64_t total, double fraction) {
    return static_cast<double>(count) >= fraction * static_cast<double>(total) - kThresholdSlack;
}

// O(1) counts over the ordered matrix. Because the matrix is symmetric,
// column c restricted to rows [a, b] equals row c restricted to columns [a, b].
class CellCounts {
public:
    explicit CellCounts(const BinaryMatrix& m) : n_(m.n()), row_(n_ * (n_ + 1), 0), box_((n_ + 1) * (n_ + 1), 0) {
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                const int cell = m(r, c) ? 1 : 0;
                row_[r * (n_ + 1) + c + 1] = row_[r * (n_ + 1) + c] + cell;
                box_[(r + 1) * (n_ + 1) + c + 1] =
                    box_[r * (n_ + 1) + c + 1] + box_[(r + 1) * (n_ + 1) + c] - box_[r * (n_ + 1) + c] + cell;
            }
        }
    }

    std::size_t n() const noexcept { return n_; }

    // Ones of row r in columns [c0, c1].
    int in_row(int r, int c0, int c1) const {
        const std::size_t base = static_cast<std::size_t>(r) * (n_ + 1);
        return row_[base + c1 + 1] - row_[base + c0];
    }
    int in_col(int c, int r0, int r1) const { return in_row(c, r0, r1); }

    int in_box(int r0, int r1, int c0, int c1) const {
        const std::size_t w = n_ + 1;
        return box_[(r1 + 1) * w + c1 + 1] - box_[r0 * w + c1 + 1] - box_[(r1 + 1) * w + c0] + box_[r0 * w + c0];
    }

private:
    std::size_t n_;
    std::vector<int> row_;
    std::vector<int> box_;
};

bool rectangle_shape_ok(int h, int w) {
    if (h == 1) return w >= kMinStarLeaves;
    if (w == 1) return h >= kMinStarLeaves;
    return h >= kMinBicliqueSide && w >= kMinBicliqueSide;
}

class Detector {
public:
    Detector(const BinaryMatrix& m, PurityParams params) : counts_(m), params_(params) {}

    // Full acceptance predicate for an off-diagonal rectangle, including
    // bounds and minimum shape.
    bool rectangle_ok(int r0, int r1, int c0, int c1) const {
        const int n = static_cast<int>(counts_.n());
        if (r0 < 0 || c1 >= n || r0 > r1 || c0 > c1 || c0 <= r1) return false;
        const int h = r1 - r0 + 1, w = c1 - c0 + 1;
        if (!rectangle_shape_ok(h, w)) return false;
        const int present = counts_.in_box(r0, r1, c0, c1);
        if (present == 0 || !meets(present, std::int64_t{h} * w, params_.tau)) return false;
        for (int r = r0; r <= r1; ++r)
            if (!meets(counts_.in_row(r, c0, c1), w, params_.sigma)) return false;
        for (int c = c0; c <= c1; ++c)
            if (!meets(counts_.in_col(c, r0, r1), h, params_.sigma)) return false;
        return true;
    }

    bool rectangle_maximal(int r0, int r1, int c0, int c1) const {
        return !rectangle_ok(r0 - 1, r1, c0, c1) && !rectangle_ok(r0, r1 + 1, c0, c1) &&
               !rectangle_ok(r0, r1, c0 - 1, c1) && !rectangle_ok(r0, r1, c0, c1 + 1);
    }

    bool clique_ok(int a, int b) const {
        const int n = static_cast<int>(counts_.n());
        if (a < 0 || b >= n || b - a + 1 < kMinCliqueSize) return false;
        const int k = b - a + 1;
        const int present = counts_.in_box(a, b, a, b) / 2;
        if (present == 0 || !meets(present, std::int64_t{k} * (k - 1) / 2, params_.tau)) return false;
        for (int r = a; r <= b; ++r)
            if (!meets(counts_.in_row(r, a, b), k - 1, params_.sigma)) return false;
        return true;
    }

    Pattern make_rectangle(int r0, int r1, int c0, int c1) const {
        const int h = r1 - r0 + 1, w = c1 - c0 + 1;
        Pattern p;
        p.kind = (h == 1 || w == 1) ? PatternKind::Star : PatternKind::Biclique;
        p.rows = {r0, r1};
        p.cols = {c0, c1};
        p.present = counts_.in_box(r0, r1, c0, c1);
        p.missing = h * w - p.present;
        return p;
    }

    Pattern make_clique(int a, int b) const {
        const int k = b - a + 1;
        Pattern p;
        p.kind = PatternKind::Clique;
        p.rows = p.cols = {a, b};
        p.present = counts_.in_box(a, b, a, b) / 2;
        p.missing = k * (k - 1) / 2 - p.present;
        return p;
    }

    std::vector<Pattern> run(const BinaryMatrix& m) const {
        const int n = static_cast<int>(m.n());
        std::vector<Pattern> out;
        if (n < 2) return out;

        int max_degree = 0;
        std::vector<int> last_one(n, -1);
        for (int r = 0; r < n; ++r) {
            max_degree = std::max(max_degree, counts_.in_row(r, 0, n - 1));
            for (int c = n - 1; c >= 0; --c)
                if (m(r, c)) {
                    last_one[r] = c;
                    break;
                }
        }
        // A line of length L inside an accepted pattern holds at least
        // max(sigma, tau) * L ones (tau through the average line), and no
        // line holds more than max_degree, which bounds every side length.
        const double strictest = std::max(params_.sigma, params_.tau);
        const int side_limit = strictest > 1e-6 ? static_cast<int>((max_degree + 1e-6) / strictest) : n;
        const bool sigma_prunes = params_.sigma > 1e-6;

        for (int a = 0; a < n; ++a) {
            for (int b = a + kMinCliqueSize - 1; b < n && b - a <= side_limit; ++b)
                if (clique_ok(a, b) && !clique_ok(a - 1, b) && !clique_ok(a, b + 1)) out.push_back(make_clique(a, b));
        }
        // A rectangle inside a clique candidate's block is part of that
        // larger candidate and is not reported on its own.
        std::vector<int> clique_reach(n, -1);
        for (const auto& p : out)
            for (int r = p.rows.first; r <= p.rows.last; ++r) clique_reach[r] = std::max(clique_reach[r], p.rows.last);

        for (int r0 = 0; r0 < n; ++r0) {
            int min_last = n;
            for (int r1 = r0; r1 + 1 < n && r1 - r0 + 1 <= side_limit; ++r1) {
                const int h = r1 - r0 + 1;
                min_last = std::min(min_last, last_one[r1]);
                // Every row needs a one right of the pattern's first column.
                if (sigma_prunes && min_last <= r1) break;
                for (int c0 = r1 + 1; c0 < n; ++c0) {
                    if (sigma_prunes && !meets(counts_.in_col(c0, r0, r1), h, params_.sigma)) continue;
                    for (int c1 = c0; c1 < n && c1 - c0 + 1 <= side_limit; ++c1) {
                        if (sigma_prunes && !meets(counts_.in_col(c1, r0, r1), h, params_.sigma)) break;
                        if (!rectangle_shape_ok(h, c1 - c0 + 1)) continue;
                        if (c1 <= clique_reach[r0]) continue;
                        if (rectangle_ok(r0, r1, c0, c1) && rectangle_maximal(r0, r1, c0, c1))
                            out.push_back(make_rectangle(r0, r1, c0, c1));
                    }
                }
            }
        }
        return out;
    }

private:
    CellCounts counts_;
    PurityParams params_;
};

auto position_key(const Pattern& p) {
    return std::make_tuple(p.rows.first, p.cols.first, p.rows.last, p.cols.last, static_cast<int>(p.kind));
}

void sort_by_position(std::vector<Pattern>& patterns) {
    std::sort(patterns.begin(), patterns.end(),
              [](const Pattern& a, const Pattern& b) { return position_key(a) < position_key(b); });
}

int extent(const std::vector<Pattern>& a, const std::vector<Pattern>& b) {
    int n = 0;
    for (const auto* list : {&a, &b})
        for (const auto& p : *list) n = std::max({n, p.rows.last + 1, p.cols.last + 1});
    return n;
}

// Upper-triangle coverage map for overlap tests.
class Coverage {
public:
    explicit Coverage(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

    bool overlaps(const Pattern& p) const {
        bool hit = false;
        visit(p, [&](std::size_t idx) { hit = hit || cells_[idx]; });
        return hit;
    }
    void mark(const Pattern& p) {
        visit(p, [&](std::size_t idx) { cells_[idx] = 1; });
    }

private:
    template <class Fn>
    void visit(const Pattern& p, Fn fn) const {
        for (int r = p.rows.first; r <= p.rows.last; ++r) {
            const int c_begin = p.kind == PatternKind::Clique ? r + 1 : p.cols.first;
            for (int c = c_begin; c <= p.cols.last; ++c) fn(static_cast<std::size_t>(r) * n_ + c);
        }
    }

    int n_;
    std::vector<char> cells_;
};

}  // namespace

std::string_view to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::Clique: return "clique";
        case PatternKind::Biclique: return "biclique";
        case PatternKind::Star: return "star";
    }
    return "unknown";
}

PatternKind pattern_kind_from_string(std::string_view name) {
    if (name == "clique") return PatternKind::Clique;
    if (name == "biclique") return PatternKind::Biclique;
    if (name == "star") return PatternKind::Star;
    throw Error("unknown pattern kind '" + std::string(name) + "'");
}

std::int64_t Pattern::capacity() const noexcept {
    if (kind == PatternKind::Clique) {
        const std::int64_t k = rows.size();
        return k * (k - 1) / 2;
    }
    return std::int64_t{rows.size()} * cols.size();
}

double Pattern::density() const noexcept {
    const auto cap = capacity();
    return cap > 0 ? static_cast<double>(present) / static_cast<double>(cap) : 0.0;
}

std::pair<int, int> Pattern::first_cell() const noexcept {
    if (kind == PatternKind::Clique) return {rows.first, rows.first + 1};
    return {rows.first, cols.first};
}

bool Pattern::covers(int r, int c) const noexcept {
    if (!rows.contains(r) || !cols.contains(c)) return false;
    return kind != PatternKind::Clique || r < c;
}

void validate_pattern(const Pattern& p, std::size_t n) {
    const auto fail = [&](const std::string& why) {
        throw PatternOutOfBounds(std::string(to_string(p.kind)) + " rows [" + std::to_string(p.rows.first) + ", " +
                                 std::to_string(p.rows.last) + "] cols [" + std::to_string(p.cols.first) + ", " +
                                 std::to_string(p.cols.last) + "]: " + why);
    };
    const int size = static_cast<int>(n);
    for (const Span& s : {p.rows, p.cols})
        if (s.first < 0 || s.last >= size || s.first > s.last) fail("range outside the matrix");
    switch (p.kind) {
        case PatternKind::Clique:
            if (p.rows != p.cols) fail("clique rows and columns differ");
            if (p.rows.size() < 2) fail("clique needs at least two vertices");
            break;
        case PatternKind::Biclique:
            if (p.cols.first <= p.rows.last) fail("biclique must lie above the diagonal");
            if (p.rows.size() < 2 || p.cols.size() < 2) fail("biclique sides must have size >= 2");
            break;
        case PatternKind::Star:
            if (p.cols.first <= p.rows.last) fail("star must lie above the diagonal");
            if ((p.rows.size() == 1) == (p.cols.size() == 1)) fail("star needs exactly one side of size 1");
            if (std::max(p.rows.size(), p.cols.size()) < 2) fail("star needs at least two leaves");
            break;
    }
    if (p.present < 1) fail("pattern without edges");
    if (p.missing < 0 || p.present + p.missing != p.capacity()) fail("present + missing != capacity");
}

void check_disjoint(const PatternSet& patterns, std::size_t n) {
    Coverage coverage(static_cast<int>(n));
    for (const auto& p : patterns) {
        validate_pattern(p, n);
        if (coverage.overlaps(p))
            throw OverlapDetected(std::string(to_string(p.kind)) + " at rows [" + std::to_string(p.rows.first) + ", " +
                                  std::to_string(p.rows.last) + "] overlaps an earlier pattern");
        coverage.mark(p);
    }
}

std::vector<Pattern> enumerate_candidates(const BinaryMatrix& m, PurityParams params) {
    if (params.sigma < 0 || params.sigma > 1 || params.tau < 0 || params.tau > 1)
        throw Error("sigma and tau must lie in [0, 1]");
    auto out = Detector(m, params).run(m);
    sort_by_position(out);
    return out;
}

std::vector<Pattern> select_cliques(const std::vector<Pattern>& candidates) {
    std::vector<Pattern> cliques;
    for (const auto& p : candidates)
        if (p.kind == PatternKind::Clique) cliques.push_back(p);
    std::sort(cliques.begin(), cliques.end(), [](const Pattern& a, const Pattern& b) {
        return std::tie(a.rows.last, a.rows.first, a.present) < std::tie(b.rows.last, b.rows.first, b.present);
    });

    struct Plan {
        std::int64_t weight = 0;
        std::vector<std::size_t> chosen;  // indices into `cliques`, by increasing row
    };
    const auto starts = [&](const Plan& plan) {
        std::vector<int> out;
        for (std::size_t i : plan.chosen) out.push_back(cliques[i].rows.first);
        return out;
    };
    const auto better = [&](const Plan& a, const Plan& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.chosen.size() != b.chosen.size()) return a.chosen.size() < b.chosen.size();
        return starts(a) < starts(b);
    };

    // best[i]: optimal plan over the first i intervals (sorted by last row).
    std::vector<Plan> best(cliques.size() + 1);
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const int first = cliques[i].rows.first;
        // Intervals ending strictly before `first` form a prefix.
        const auto compatible = static_cast<std::size_t>(
            std::partition_point(cliques.begin(), cliques.begin() + static_cast<std::ptrdiff_t>(i),
                                 [&](const Pattern& p) { return p.rows.last < first; }) -
            cliques.begin());
        Plan take = best[compatible];
        take.weight += cliques[i].present;
        take.chosen.push_back(i);
        best[i + 1] = better(take, best[i]) ? std::move(take) : best[i];
    }

    std::vector<Pattern> out;
    for (std::size_t i : best.back().chosen) out.push_back(cliques[i]);
    return out;
}

std::vector<Pattern> select_rectangles(const std::vector<Pattern>& candidates,
                                       const std::vector<Pattern>& chosen_cliques) {
    std::vector<Pattern> pool;
    for (const auto& p : candidates)
        if (p.kind != PatternKind::Clique) pool.push_back(p);
    std::sort(pool.begin(), pool.end(), [](const Pattern& a, const Pattern& b) {
        const int wa = a.present - a.missing, wb = b.present - b.missing;
        if (wa != wb) return wa > wb;
        if (a.present != b.present) return a.present > b.present;
        return position_key(a) < position_key(b);
    });

    Coverage coverage(extent(pool, chosen_cliques));
    for (const auto& c : chosen_cliques) coverage.mark(c);
    std::vector<Pattern> out;
    for (const auto& p : pool) {
        if (coverage.overlaps(p)) continue;
        coverage.mark(p);
        out.push_back(p);
    }
    return out;
}

PatternSet detect(const BinaryMatrix& m, PurityParams params) {
    const auto candidates = enumerate_candidates(m, params);
    PatternSet out = select_cliques(candidates);
    const auto rectangles = select_rectangles(candidates, out);
    out.insert(out.end(), rectangles.begin(), rectangles.end());
    sort_by_position(out);
    return out;
}

}  // namespace biofab
