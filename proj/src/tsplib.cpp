#include <algorithm>
#include <charconv>
#include <sstream>

#include "biofab/error.hpp"
#include "biofab/seriation.hpp"

namespace biofab {

std::string export_tsplib(const Graph& graph, std::string_view name) {
    const std::size_t n = graph.n();
    if (n < 2) throw Error("TSPLIB export needs n >= 2");
    const std::vector<int> dist = row_dissimilarity(graph);
    const std::size_t dim = n + 1;
    std::ostringstream out;
    out << "NAME: " << name << '\n'
        << "TYPE: TSP\n"
        << "COMMENT: row dissimilarity of " << n << " vertices; city " << dim << " is a zero-distance dummy\n"
        << "DIMENSION: " << dim << '\n'
        << "EDGE_WEIGHT_TYPE: EXPLICIT\n"
        << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
        << "EDGE_WEIGHT_SECTION\n";
    for (std::size_t u = 0; u < dim; ++u) {
        for (std::size_t v = 0; v < dim; ++v) {
            const int d = (u == n || v == n) ? 0 : dist[u * n + v];
            out << (v ? " " : "") << d;
        }
        out << '\n';
    }
    out << "EOF\n";
    return out.str();
}

VertexOrdering import_tour(std::string_view bytes, std::size_t n) {
    if (const auto pos = bytes.find("TOUR_SECTION"); pos != std::string_view::npos)
        bytes.remove_prefix(pos + std::string_view("TOUR_SECTION").size());

    std::vector<long long> cities;
    std::istringstream in{std::string(bytes)};
    std::string token;
    while (in >> token) {
        if (token == "EOF") break;
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw MalformedTour("unexpected token '" + token + "' in tour");
        if (value == -1) break;
        cities.push_back(value);
    }

    const bool with_dummy = cities.size() == n + 1;
    if (cities.size() != n && !with_dummy)
        throw TourLengthMismatch("tour lists " + std::to_string(cities.size()) + " cities, expected " +
                                 std::to_string(n) + " or " + std::to_string(n + 1));
    const auto limit = static_cast<long long>(cities.size());
    std::vector<char> seen(cities.size() + 1, 0);
    for (long long c : cities) {
        if (c < 1 || c > limit) throw MalformedTour("city " + std::to_string(c) + " out of range");
        if (seen[c]) throw MalformedTour("city " + std::to_string(c) + " repeated");
        seen[c] = 1;
    }

    std::vector<Vertex> path;
    path.reserve(n);
    if (with_dummy) {
        const auto dummy = std::find(cities.begin(), cities.end(), limit) - cities.begin();
        for (std::size_t k = 1; k < cities.size(); ++k)
            path.push_back(static_cast<Vertex>(cities[(dummy + k) % cities.size()] - 1));
    } else {
        for (long long c : cities) path.push_back(static_cast<Vertex>(c - 1));
    }
    if (path.size() > 1 && path.front() > path.back()) std::reverse(path.begin(), path.end());
    return VertexOrdering(std::move(path));
}

}  // namespace biofab
