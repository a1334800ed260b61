#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cdc/io.hpp"
#include "cdc/oracle.hpp"
#include "cdc/pipelines.hpp"

using namespace cdc;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition failure, 4 internal soundness assertion.
constexpr int kExitVerify = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSoundness = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphFormat parse_format(const std::string& name) {
    if (name == "graph6") return GraphFormat::graph6;
    if (name == "edge_list") return GraphFormat::edge_list;
    throw MalformedInput("unknown format \"" + name + "\"");
}

CubicGraph load_graph(const std::string& path, const std::string& format) {
    return parse_graph(slurp(path), parse_format(format));
}

PipelineResult run_strategy(const CubicGraph& g, const std::string& strategy,
                            std::optional<int> k) {
    if (strategy == "half-n") return embed_half_n(g);
    if (strategy == "tenth-n") return embed_tenth_n(g);
    if (strategy == "over-2k") return embed_over_2k(g, k);
    if (strategy == "cyclic-2k") {
        if (!k) throw MalformedInput("cyclic-2k requires --k");
        return pipeline_cyclically_2k(g, *k);
    }
    throw MalformedInput("unknown strategy \"" + strategy + "\"");
}

int cmd_embed(const std::string& input, const std::string& format, const std::string& strategy,
              std::optional<int> k, const std::string& out_path) {
    CubicGraph g = load_graph(input, format);
    PipelineResult result = run_strategy(g, strategy, k);
    std::cout << pipeline_report(g, result);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << embedding_to_text(g, result.embedding);
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& format,
               const std::string& embedding_path) {
    CubicGraph g = load_graph(graph_path, format);
    Embedding emb = embedding_from_text(g, slurp(embedding_path));
    VerifyReport report = verify_embedding(g, emb);
    std::cout << report.text;
    return 0;
}

int cmd_gen(const std::string& what, int n, std::uint64_t seed) {
    if (what == "petersen") {
        std::cout << write_edge_list(generate_petersen());
    } else if (what == "prism") {
        std::cout << write_edge_list(CubicGraph(
            6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
    } else if (what == "gn") {
        std::cout << write_edge_list(generate_gn(n, seed));
    } else if (what == "random") {
        std::cout << write_edge_list(generate_random_cubic_bridgeless(n, seed));
    } else {
        throw MalformedInput("unknown generator \"" + what + "\"");
    }
    return 0;
}

int cmd_oracle_min_singular(const std::string& input, const std::string& format, int guard) {
    CubicGraph g = load_graph(input, format);
    MinSingularResult r = min_singular_exhaustive(g, guard);
    std::cout << "min singular over all embeddings: " << r.count << '\n';
    std::cout << "[embedding]\n" << embedding_to_text(g, r.witness);
    return 0;
}

int cmd_oracle_petersen(bool full_filter) {
    PetersenNonextensionReport r = check_petersen_nonextension(full_filter);
    std::cout << "extension embeddings enumerated: " << r.embeddings_enumerated << '\n';
    std::cout << "min singular over extensions: " << r.min_singular << '\n';
    std::cout << "circuit lengths:";
    for (int len : r.circuit_lengths) std::cout << ' ' << len;
    std::cout << '\n';
    std::cout << "alternating circuit lengths:";
    for (int len : r.alternating_circuit_lengths) std::cout << ' ' << len;
    std::cout << '\n';
    std::cout << "uncovered slots: " << r.uncovered_slots << '\n';
    std::cout << "cdc completion possible: " << (r.cdc_extension_possible ? "yes" : "no") << '\n';
    return 0;
}

int cmd_bench(const std::string& dir, const std::string& format, const std::string& out_path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    struct Row {
        std::string name, strategy;
        int n;
        long long bound;
        std::size_t singular;
        int chi;
        bool orientable;
        int br;
        double ms;
    };
    std::vector<Row> rows;
    for (const fs::path& file : files) {
        CubicGraph g = parse_graph(slurp(file.string()), parse_format(format));
        std::optional<int> cc = cyclic_edge_connectivity(g);
        std::vector<std::pair<std::string, std::function<PipelineResult()>>> runs;
        runs.emplace_back("half-n", [&] { return embed_half_n(g); });
        if (edge_connectivity(g) >= 3)
            runs.emplace_back("tenth-n", [&] { return embed_tenth_n(g); });
        if (cc && *cc >= 3) runs.emplace_back("over-2k", [&] { return embed_over_2k(g); });
        int k2 = cc ? std::max(1, *cc / 2) : 2;
        runs.emplace_back("cyclic-2k", [&, k2] { return pipeline_cyclically_2k(g, k2); });
        for (auto& [name, run] : runs) {
            auto t0 = std::chrono::steady_clock::now();
            PipelineResult r = run();
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            rows.push_back({file.stem().string(), name, r.n, r.bound_num / r.bound_den,
                            r.report.singular.size(), r.report.euler_characteristic,
                            r.report.orientable, r.report.bender_richmond_bound, ms});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.name, a.strategy) < std::tie(b.name, b.strategy);
    });
    std::ostringstream csv;
    csv << "name,n,strategy,bound,singular,chi,orientable,br_bound,wall_ms\n";
    for (const Row& r : rows)
        csv << r.name << ',' << r.n << ',' << r.strategy << ',' << r.bound << ',' << r.singular
            << ',' << r.chi << ',' << (r.orientable ? "yes" : "no") << ',' << r.br << ','
            << static_cast<long long>(r.ms * 1000) / 1000.0 << '\n';
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"embeddings of cubic graphs with few singular edges"};
    app.require_subcommand(1);

    auto* embed = app.add_subcommand("embed", "run an embedding pipeline and print its report");
    std::string input, format = "edge_list", strategy, out_path;
    int k_value = -1;
    std::uint64_t seed = 0;
    embed->add_option("--input", input, "graph file")->required();
    embed->add_option("--format", format, "graph6 | edge_list");
    embed->add_option("--strategy", strategy, "half-n | tenth-n | over-2k | cyclic-2k")->required();
    embed->add_option("--k", k_value, "connectivity parameter for over-2k / cyclic-2k");
    embed->add_option("--seed", seed, "seed for randomized steps (none currently)");
    embed->add_option("--out", out_path, "write the embedding to this file");

    auto* verify = app.add_subcommand("verify", "re-trace an embedding against its graph");
    std::string v_graph, v_format = "edge_list", v_embedding;
    verify->add_option("--graph", v_graph, "graph file")->required();
    verify->add_option("--format", v_format, "graph6 | edge_list");
    verify->add_option("--embedding", v_embedding, "embedding file")->required();

    auto* gen = app.add_subcommand("gen", "emit a graph as edge_list");
    std::string g_what;
    int g_n = 0;
    std::uint64_t g_seed = 0;
    gen->add_option("what", g_what, "petersen | prism | gn | random")->required();
    gen->add_option("n", g_n, "order parameter for gn / random");
    gen->add_option("seed", g_seed, "seed for gn / random");

    auto* oracle = app.add_subcommand("oracle", "exhaustive ground-truth checks");
    std::string o_mode, o_input, o_format = "edge_list";
    int o_guard = 14;
    bool o_full = false;
    oracle->add_option("mode", o_mode, "min-singular | petersen-extension")->required();
    oracle->add_option("--input", o_input, "graph file (min-singular)");
    oracle->add_option("--format", o_format, "graph6 | edge_list");
    oracle->add_option("--guard", o_guard, "enumeration guard (vertices)");
    oracle->add_flag("--full-filter", o_full, "cross-check by filtering all embeddings");

    auto* bench = app.add_subcommand("bench", "sweep a directory of graphs, emit CSV");
    std::string b_dir, b_format = "edge_list", b_out;
    bench->add_option("--dir", b_dir, "directory of graph files")->required();
    bench->add_option("--format", b_format, "graph6 | edge_list");
    bench->add_option("--out", b_out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (embed->parsed())
            return cmd_embed(input, format, strategy,
                             k_value >= 0 ? std::optional<int>(k_value) : std::nullopt, out_path);
        if (verify->parsed()) return cmd_verify(v_graph, v_format, v_embedding);
        if (gen->parsed()) return cmd_gen(g_what, g_n, g_seed);
        if (oracle->parsed()) {
            if (o_mode == "min-singular") {
                if (o_input.empty()) throw MalformedInput("min-singular requires --input");
                return cmd_oracle_min_singular(o_input, o_format, o_guard);
            }
            if (o_mode == "petersen-extension") return cmd_oracle_petersen(o_full);
            throw MalformedInput("unknown oracle mode \"" + o_mode + "\"");
        }
        if (bench->parsed()) return cmd_bench(b_dir, b_format, b_out);
    } catch (const BoundViolated& e) {
        std::cerr << "soundness violation: " << e.what() << '\n';
        return kExitSoundness;
    } catch (const InconsistentLambda& e) {
        std::cerr << "soundness violation: " << e.what() << '\n';
        return kExitSoundness;
    } catch (const InternalDegreeError& e) {
        std::cerr << "soundness violation: " << e.what() << '\n';
        return kExitSoundness;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitVerify;
    } catch (const MalformedInput& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const NotCubic& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const LoopEdge& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        // remaining library errors are precondition failures
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return 0;
}
