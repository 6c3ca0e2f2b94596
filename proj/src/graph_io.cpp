#include "biofab/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "biofab/error.hpp"

namespace biofab {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class Fn>
void for_each_line(std::string_view bytes, Fn fn) {
    std::size_t line_no = 0;
    while (!bytes.empty()) {
        const std::size_t end = bytes.find('\n');
        std::string_view line = bytes.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(++line_no, line);
        if (end == std::string_view::npos) break;
        bytes.remove_prefix(end + 1);
    }
}

bool parse_index(std::string_view token, long long& out) {
    if (token.empty()) return false;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

Graph load_edge_list(std::string_view bytes) {
    struct RawEdge {
        std::string_view a, b;
    };
    std::vector<RawEdge> raw;
    bool all_indices = true;
    for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '#') return;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two tokens, found " + std::to_string(tokens.size()));
        for (auto t : tokens) {
            long long v = 0;
            if (!parse_index(t, v) || v < 0) all_indices = false;
        }
        raw.push_back({tokens[0], tokens[1]});
    });

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(raw.size());
    if (all_indices) {
        long long max_index = -1;
        for (const auto& e : raw) {
            long long a = 0, b = 0;
            parse_index(e.a, a);
            parse_index(e.b, b);
            if (std::max(a, b) >= (1LL << 30)) throw ParseError(0, "vertex index too large");
            max_index = std::max({max_index, a, b});
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
        if (max_index < 0) throw EmptyGraph();
        return Graph(static_cast<std::size_t>(max_index + 1), std::move(edges));
    }

    std::vector<std::string> labels;
    std::unordered_map<std::string_view, Vertex> index;
    auto intern = [&](std::string_view name) {
        auto [it, inserted] = index.emplace(name, static_cast<Vertex>(labels.size()));
        if (inserted) labels.emplace_back(name);
        return it->second;
    };
    for (const auto& e : raw) {
        const Vertex a = intern(e.a);
        const Vertex b = intern(e.b);
        edges.emplace_back(a, b);
    }
    if (labels.empty()) throw EmptyGraph();
    const std::size_t n = labels.size();
    return Graph(n, std::move(edges), std::move(labels));
}

Graph load_matrix_market(std::string_view bytes) {
    bool header_seen = false;
    bool size_seen = false;
    long long rows = 0, cols = 0, declared = 0, read = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for_each_line(bytes, [&](std::size_t line_no, std::string_view line) {
        if (line_no == 1 && line.starts_with("%%MatrixMarket")) {
            auto tokens = tokenize(line);
            std::vector<std::string> lower;
            for (auto t : tokens) {
                std::string s(t);
                std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
                lower.push_back(std::move(s));
            }
            if (lower.size() < 4 || lower[1] != "matrix" || lower[2] != "coordinate")
                throw ParseError(line_no, "only 'matrix coordinate' MatrixMarket files are supported");
            header_seen = true;
            return;
        }
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().front() == '%') return;
        if (!size_seen) {
            if (tokens.size() != 3 || !parse_index(tokens[0], rows) || !parse_index(tokens[1], cols) ||
                !parse_index(tokens[2], declared) || rows < 0 || cols < 0 || declared < 0)
                throw ParseError(line_no, "expected 'rows cols entries' size line");
            if (rows != cols) throw ParseError(line_no, "adjacency matrix must be square");
            if (rows >= (1LL << 30)) throw ParseError(line_no, "matrix too large");
            size_seen = true;
            return;
        }
        long long i = 0, j = 0;
        if (tokens.size() < 2 || !parse_index(tokens[0], i) || !parse_index(tokens[1], j))
            throw ParseError(line_no, "expected 'row col [value]' entry");
        if (i < 1 || j < 1 || i > rows || j > cols) throw ParseError(line_no, "entry index out of range");
        if (++read > declared) throw ParseError(line_no, "more entries than declared");
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    });
    if (!header_seen) throw ParseError(1, "missing %%MatrixMarket header");
    if (!size_seen) throw ParseError(1, "missing size line");
    if (read != declared)
        throw ParseError(0, "declared " + std::to_string(declared) + " entries, found " + std::to_string(read));
    if (rows == 0) throw EmptyGraph();
    return Graph(static_cast<std::size_t>(rows), std::move(edges));
}

}  // namespace

Graph load_graph(GraphFormat format, std::string_view bytes) {
    switch (format) {
        case GraphFormat::EdgeList: return load_edge_list(bytes);
        case GraphFormat::MatrixMarket: return load_matrix_market(bytes);
    }
    throw Error("unknown graph format");
}

Graph load_graph_file(GraphFormat format, const std::string& path) {
    return load_graph(format, read_file(path));
}

std::string save_edge_list(const Graph& graph) {
    std::ostringstream out;
    for (auto [u, v] : graph.edges()) out << graph.label(u) << ' ' << graph.label(v) << '\n';
    return out.str();
}

std::string save_json(const VertexOrdering& ordering, const PatternSet& patterns) {
    nlohmann::ordered_json doc;
    doc["n"] = ordering.n();
    doc["order"] = ordering.perm();
    auto list = nlohmann::ordered_json::array();
    for (const auto& p : patterns) {
        nlohmann::ordered_json entry;
        entry["kind"] = std::string(to_string(p.kind));
        entry["rows"] = {p.rows.first, p.rows.last};
        entry["cols"] = {p.cols.first, p.cols.last};
        entry["present"] = p.present;
        entry["missing"] = p.missing;
        list.push_back(std::move(entry));
    }
    doc["patterns"] = std::move(list);
    return doc.dump();
}

PipelineResult load_json(std::string_view bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    try {
        PipelineResult out;
        out.n = doc.at("n").get<std::size_t>();
        out.order = VertexOrdering(doc.at("order").get<std::vector<Vertex>>());
        if (out.order.n() != out.n) throw Error("order length does not match n");
        for (const auto& entry : doc.at("patterns")) {
            Pattern p;
            p.kind = pattern_kind_from_string(entry.at("kind").get<std::string>());
            const auto rows = entry.at("rows").get<std::vector<int>>();
            const auto cols = entry.at("cols").get<std::vector<int>>();
            if (rows.size() != 2 || cols.size() != 2) throw Error("rows/cols must be [first, last]");
            p.rows = {rows[0], rows[1]};
            p.cols = {cols[0], cols[1]};
            p.present = entry.at("present").get<int>();
            p.missing = entry.at("missing").get<int>();
            validate_pattern(p, out.n);
            out.patterns.push_back(p);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + path);
}

}  // namespace biofab
