// Command-line front end: single-model analysis, batch benchmarking, and
// random network generation.
//
// Exit codes: 0 analyzed (either verdict), 2 parse/input failure,
// 3 method disagreement (a bug, never data), 4 bad flags.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <crnbinom/crnbinom.hpp>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitBadFlags = 4;

std::string slurp_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

/// "5" or "2..8" -> [lo, hi].
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoul(text);
            return {std::uint32_t(v), std::uint32_t(v)};
        }
        const auto lo = std::stoul(text.substr(0, dots));
        const auto hi = std::stoul(text.substr(dots + 2));
        return {std::uint32_t(lo), std::uint32_t(hi)};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected N or LO..HI, got '" + text + "'");
    }
}

struct AnalyzeArgs {
    std::string file;
    std::string method = "both";
    std::string format = "text";
    std::string dump_graph;
    std::string dump_dir = ".";
    bool show_odes = false;
    bool dump_matrix = false;
};

crnbinom::Method method_from_string(const std::string& name) {
    if (name == "matrix") return crnbinom::Method::Matrix;
    if (name == "graph") return crnbinom::Method::Graph;
    return crnbinom::Method::Both;
}

void emit_graph_dumps(const crnbinom::ReactionNetwork& net, const std::string& model,
                      const AnalyzeArgs& args) {
    const fs::path dir(args.dump_dir);
    fs::create_directories(dir);
    auto dump = [&](const crnbinom::SRGraph& g, const std::string& tag) {
        const fs::path path = dir / (model + "-" + tag + ".dot");
        write_file(path, crnbinom::to_dot(g, model + "_" + tag));
        std::cerr << "wrote " << path.string() << "\n";
    };
    const crnbinom::SRGraph initial = crnbinom::create_graph(net);
    if (args.dump_graph == "initial") {
        dump(initial, "initial");
    } else if (args.dump_graph == "final") {
        dump(crnbinom::transform(initial), "final");
    } else {  // steps
        char tag[16];
        std::snprintf(tag, sizeof(tag), "step-%02u", 0u);
        dump(initial, tag);
        unsigned step = 0;
        crnbinom::transform(initial,
                            [&](const crnbinom::SRGraph& g, const crnbinom::TransformStep&) {
                                std::snprintf(tag, sizeof(tag), "step-%02u", ++step);
                                dump(g, tag);
                            });
    }
}

int run_analyze(const AnalyzeArgs& args, const crnbinom::ParseOptions& parse_options) {
    crnbinom::ParseResult parsed;
    try {
        parsed = crnbinom::parse_network(slurp_file(args.file), parse_options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << args.file << ": " << e.what() << "\n";
        return kExitParse;
    }
    for (const auto& w : parsed.warnings)
        std::cerr << "warning: line " << w.line << ": " << w.message << "\n";

    const std::string model = fs::path(args.file).stem().string();
    const crnbinom::ReactionNetwork& net = parsed.network;

    crnbinom::AnalysisReport report;
    try {
        report = crnbinom::analyze(model, net, method_from_string(args.method));
    } catch (const crnbinom::MethodDisagreement& e) {
        std::cerr << "fatal: " << e.what() << "\n"
                  << e.matrix_trace() << e.graph_trace();
        return kExitDisagreement;
    }

    if (!args.dump_graph.empty()) emit_graph_dumps(net, model, args);

    const bool want_matrix_dump = args.dump_matrix;
    crnbinom::BinomialCoefficientMatrix matrix;
    crnbinom::RrefResult reduced;
    if (want_matrix_dump) {
        matrix = crnbinom::build_matrix(net);
        reduced = crnbinom::rref(crnbinom::to_rational(matrix));
    }

    if (args.format == "json") {
        nlohmann::json j = crnbinom::to_json(report);
        nlohmann::json warnings = nlohmann::json::array();
        for (const auto& w : parsed.warnings) warnings.push_back(w.message);
        j["warnings"] = std::move(warnings);
        if (args.show_odes) {
            const auto names = net.species_names();
            const auto rates = crnbinom::rate_symbol_names(net);
            nlohmann::json odes = nlohmann::json::object();
            const auto rhs = crnbinom::steady_state_polynomials(net);
            for (std::size_t k = 0; k < rhs.size(); ++k)
                odes["d[" + names[k] + "]/dt"] = crnbinom::to_string(rhs[k], names, rates);
            j["odes"] = std::move(odes);
        }
        if (want_matrix_dump) {
            j["matrix"] = crnbinom::to_json(matrix);
            j["rref"] = crnbinom::to_json(reduced.matrix, matrix.row_labels, matrix.col_labels);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "model: " << report.model << "\n"
              << "species: " << report.species << "\n"
              << "reactions: " << report.reactions << "\n"
              << "method: " << crnbinom::to_string(report.method) << "\n"
              << "verdict: " << crnbinom::to_string(report.verdict) << "\n";
    if (report.matrix_ms)
        std::cout << "t_matrix_ms: " << crnbinom::detail::format_fixed(*report.matrix_ms, 6)
                  << "\n";
    if (report.graph_ms)
        std::cout << "t_graph_ms: " << crnbinom::detail::format_fixed(*report.graph_ms, 6)
                  << "\n";
    if (report.agreement) std::cout << "agreement: " << (*report.agreement ? "yes" : "no") << "\n";
    if (!report.violating_species.empty()) {
        std::cout << "violating rows:";
        for (const auto& s : report.violating_species) std::cout << ' ' << s;
        std::cout << "\n";
    }
    if (args.show_odes) {
        const auto names = net.species_names();
        const auto rates = crnbinom::rate_symbol_names(net);
        const auto rhs = crnbinom::steady_state_polynomials(net);
        std::cout << "odes:\n";
        for (std::size_t k = 0; k < rhs.size(); ++k)
            std::cout << "  d[" << names[k] << "]/dt = "
                      << crnbinom::to_string(rhs[k], names, rates) << "\n";
    }
    if (want_matrix_dump) {
        std::cout << "binomial coefficient matrix:\n"
                  << crnbinom::format_matrix_table(matrix) << "rref:\n"
                  << crnbinom::format_matrix_table(reduced.matrix, matrix.row_labels,
                                                   matrix.col_labels);
    }
    return kExitOk;
}

struct BenchArgs {
    std::string path;
    std::string out_csv;
    std::string out_json;
    unsigned threads = 1;
};

int run_bench_cmd(const BenchArgs& args, const crnbinom::ParseOptions& parse_options) {
    crnbinom::BenchOptions options;
    options.threads = args.threads;
    options.parse = parse_options;
    crnbinom::BenchReport report;
    try {
        report = crnbinom::run_bench(args.path, options);
    } catch (const crnbinom::MethodDisagreement& e) {
        std::cerr << "fatal: " << e.what() << "\n"
                  << e.matrix_trace() << e.graph_trace();
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    for (const auto& err : report.errors)
        std::cerr << "error: model " << err.model << ": " << err.message << "\n";

    const std::string csv = crnbinom::to_csv(report);
    std::ostringstream summary;
    summary << "models: " << report.rows.size();
    if (report.median_speedup)
        summary << "  median speedup (t_matrix/t_graph): "
                << crnbinom::detail::format_fixed(*report.median_speedup, 3);
    summary << "\n";
    if (args.out_csv.empty()) {
        std::cout << csv;
        std::cerr << summary.str();
    } else {
        write_file(args.out_csv, csv);
        std::cout << summary.str();
    }
    if (!args.out_json.empty()) write_file(args.out_json, crnbinom::to_json(report).dump(2));
    return kExitOk;
}

struct RandomArgs {
    std::uint64_t seed = 0;
    std::string species = "2..6";
    std::string reactions = "1..6";
    std::uint32_t max_coeff = 3;
    std::uint32_t max_complex_size = 3;
    std::string emit;
};

int run_random(const RandomArgs& args) {
    crnbinom::ReactionNetwork net;
    try {
        crnbinom::RandomNetworkSpec spec;
        spec.seed = args.seed;
        std::tie(spec.min_species, spec.max_species) = parse_range(args.species);
        std::tie(spec.min_reactions, spec.max_reactions) = parse_range(args.reactions);
        spec.max_coefficient = args.max_coeff;
        spec.max_complex_size = args.max_complex_size;
        net = crnbinom::generate_random(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadFlags;
    }
    const std::string dsl = crnbinom::to_dsl(net);
    if (args.emit.empty())
        std::cout << dsl;
    else
        write_file(args.emit, dsl);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unconditional binomiality tester for reversible chemical reaction networks"};
    app.require_subcommand(1);
    bool assume_reversible = false;
    app.add_flag("--assume-reversible", assume_reversible,
                 "treat '=>' reactions as reversible with a free reverse rate constant");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one model file");
    analyze_cmd->add_option("file", analyze_args.file, "model in the reaction DSL")->required();
    analyze_cmd->add_option("--method", analyze_args.method)
        ->check(CLI::IsMember({"matrix", "graph", "both"}));
    analyze_cmd->add_flag("--show-odes", analyze_args.show_odes,
                          "print the steady-state polynomials");
    analyze_cmd->add_flag("--dump-matrix", analyze_args.dump_matrix,
                          "print the coefficient matrix and its RREF");
    analyze_cmd->add_option("--dump-graph", analyze_args.dump_graph,
                            "write species-reaction graph snapshots as DOT")
        ->check(CLI::IsMember({"initial", "final", "steps"}));
    analyze_cmd->add_option("--dump-dir", analyze_args.dump_dir,
                            "directory for graph dumps (default .)");
    analyze_cmd->add_option("--format", analyze_args.format)
        ->check(CLI::IsMember({"text", "json"}));

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run both methods over a corpus");
    bench_cmd->add_option("path", bench_args.path, "directory of .crn files or a batch file")
        ->required();
    bench_cmd->add_option("--out", bench_args.out_csv, "write the CSV report here");
    bench_cmd->add_option("--json", bench_args.out_json, "write the JSON report here");
    bench_cmd->add_option("--threads", bench_args.threads, "concurrent analyses");

    RandomArgs random_args;
    auto* random_cmd = app.add_subcommand("random", "generate a random reversible network");
    random_cmd->add_option("--seed", random_args.seed)->required();
    random_cmd->add_option("--species", random_args.species, "count or range LO..HI");
    random_cmd->add_option("--reactions", random_args.reactions, "count or range LO..HI");
    random_cmd->add_option("--max-coeff", random_args.max_coeff);
    random_cmd->add_option("--max-complex-size", random_args.max_complex_size);
    random_cmd->add_option("--emit", random_args.emit, "write the DSL to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    crnbinom::ParseOptions parse_options;
    parse_options.assume_reversible = assume_reversible;
    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_args, parse_options);
        if (bench_cmd->parsed()) return run_bench_cmd(bench_args, parse_options);
        return run_random(random_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
