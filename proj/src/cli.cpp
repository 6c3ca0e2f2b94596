#include "biofab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "biofab/error.hpp"
#include "biofab/fabric.hpp"
#include "biofab/graph_io.hpp"
#include "biofab/render.hpp"
#include "biofab/seriation.hpp"

namespace biofab {
namespace {

struct Options {
    std::string input;
    std::string format = "edgelist";
    double sigma = 0.5;
    double tau = 0.95;
    std::string order = "heuristic";
    std::string order_file;
    std::uint64_t seed = 1;
    std::string tour_in;
    std::string tsp_out;
    std::vector<std::string> emit;
    std::string out;
    double unit = 12.0;
    bool labels = false;
};

class StageTimer {
public:
    template <class Fn>
    auto time(const std::string& stage, Fn fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        const auto stop = std::chrono::steady_clock::now();
        stages_.emplace_back(stage, std::chrono::duration<double, std::milli>(stop - start).count());
        return result;
    }

    std::string report() const {
        std::string out;
        for (const auto& [stage, ms] : stages_) out += fmt::format(" {}_ms={:.3f}", stage, ms);
        return out;
    }

private:
    std::vector<std::pair<std::string, double>> stages_;
};

std::vector<Vertex> read_order_file(const std::string& path, const Graph& graph) {
    std::istringstream in(read_file(path));
    std::map<std::string, Vertex> by_label;
    if (graph.labels())
        for (std::size_t v = 0; v < graph.n(); ++v) by_label.emplace((*graph.labels())[v], static_cast<Vertex>(v));
    std::vector<Vertex> perm;
    std::string token;
    while (in >> token) {
        if (token.front() == '#') {
            std::getline(in, token);
            continue;
        }
        if (auto it = by_label.find(token); it != by_label.end()) {
            perm.push_back(it->second);
            continue;
        }
        try {
            std::size_t used = 0;
            const long v = std::stol(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            perm.push_back(static_cast<Vertex>(v));
        } catch (const std::logic_error&) {
            throw InvalidPermutation("unknown vertex '" + token + "' in " + path);
        }
    }
    return perm;
}

std::string output_path(const Options& opt, const std::string& emit) {
    static const std::map<std::string, std::string> suffix{
        {"fabric-svg", ".fabric.svg"}, {"matrix-svg", ".matrix.svg"}, {"json", ".json"}, {"scene", ".scene.json"}};
    if (!opt.out.empty() && opt.emit.size() == 1) return opt.out;
    std::string stem = opt.out;
    if (stem.empty()) {
        stem = opt.input;
        const auto slash = stem.find_last_of('/');
        const auto dot = stem.find_last_of('.');
        if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) stem.erase(dot);
    }
    return stem + suffix.at(emit);
}

int run_pipeline(Options opt, std::ostream& out) {
    if (opt.emit.empty()) opt.emit.push_back("fabric-svg");
    StageTimer timer;

    const Graph graph = timer.time("load", [&] {
        return load_graph_file(opt.format == "mm" ? GraphFormat::MatrixMarket : GraphFormat::EdgeList, opt.input);
    });

    if (!opt.tsp_out.empty()) write_file(opt.tsp_out, export_tsplib(graph));

    const OrderingResult ordered = timer.time("order", [&]() -> OrderingResult {
        if (!opt.tour_in.empty()) {
            VertexOrdering tour = import_tour(read_file(opt.tour_in), graph.n());
            return order(graph, ordering_method::Given{tour.perm()});
        }
        if (opt.order == "identity") return order(graph, ordering_method::Identity{});
        if (opt.order == "given") return order(graph, ordering_method::Given{read_order_file(opt.order_file, graph)});
        if (opt.order == "exhaustive") return order(graph, ordering_method::Exhaustive{});
        return order(graph, ordering_method::Heuristic{opt.seed});
    });

    const BinaryMatrix matrix = adjacency(graph, ordered.ordering);
    const PatternSet patterns = timer.time("detect", [&] { return detect(matrix, {opt.sigma, opt.tau}); });
    const EdgeSequence sequence = timer.time("unfold", [&] { return unfold(matrix, patterns); });
    const FabricLayout fabric = timer.time("layout", [&] { return layout(sequence, patterns, graph.n()); });

    StyleConfig style;
    style.unit = opt.unit;
    style.show_labels = opt.labels;
    std::vector<std::string> row_labels;
    for (std::size_t k = 0; k < graph.n(); ++k) row_labels.push_back(graph.label(ordered.ordering[k]));

    timer.time("render", [&] {
        for (const auto& emit : opt.emit) {
            std::string bytes;
            if (emit == "fabric-svg") bytes = render_fabric_svg(fabric, style, row_labels);
            else if (emit == "matrix-svg") bytes = render_matrix_svg(matrix, patterns, style, row_labels);
            else if (emit == "json") bytes = save_json(ordered.ordering, patterns);
            else bytes = layout_to_json(fabric);
            write_file(output_path(opt, emit), bytes);
        }
        return 0;
    });

    std::map<PatternKind, int> kinds;
    for (const auto& p : patterns) ++kinds[p.kind];
    out << fmt::format("n={} edges={} morans_i={:.6f} cliques={} bicliques={} stars={}{}\n", graph.n(),
                       graph.edge_count(), ordered.morans_i, kinds[PatternKind::Clique], kinds[PatternKind::Biclique],
                       kinds[PatternKind::Star], timer.report());
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Order a graph's adjacency matrix, detect noisy patterns and draw a motif BioFabric", "biofab"};
    app.add_option("--input", opt.input, "Graph file")->required();
    app.add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"edgelist", "mm"}));
    app.add_option("--sigma", opt.sigma, "Per-line purity threshold")->check(CLI::Range(0.0, 1.0));
    app.add_option("--tau", opt.tau, "Overall density threshold")->check(CLI::Range(0.0, 1.0));
    auto* order_opt = app.add_option("--order", opt.order, "Ordering method")
                          ->check(CLI::IsMember({"heuristic", "identity", "given", "exhaustive"}));
    app.add_option("--order-file", opt.order_file, "Permutation for --order given (indices or labels)");
    app.add_option("--seed", opt.seed, "Seed for the heuristic ordering");
    app.add_option("--tour-in", opt.tour_in, "TSPLIB tour file to use as the ordering")->excludes(order_opt);
    app.add_option("--tsp-out", opt.tsp_out, "Write the TSPLIB instance for an external solver");
    app.add_option("--emit", opt.emit, "Outputs to write (repeatable)")
        ->check(CLI::IsMember({"fabric-svg", "matrix-svg", "json", "scene"}));
    app.add_option("--out", opt.out, "Output path (or path stem when emitting several outputs)");
    app.add_option("--unit", opt.unit, "Pixels per grid unit")->check(CLI::PositiveNumber);
    app.add_flag("--labels", opt.labels, "Draw vertex labels");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (opt.order == "given" && opt.order_file.empty())
            throw CLI::ValidationError("--order given requires --order-file");
        if (!opt.order_file.empty() && opt.order != "given")
            throw CLI::ValidationError("--order-file requires --order given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "biofab: " << e.what() << '\n';
        return 2;
    }

    try {
        return run_pipeline(opt, out);
    } catch (const Error& e) {
        err << "biofab: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace biofab
