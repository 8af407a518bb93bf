#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "crnbinom/graph.hpp"
#include "crnbinom/matrix.hpp"
#include "crnbinom/network.hpp"
#include "crnbinom/verdict.hpp"

namespace crnbinom {

enum class Method { Matrix, Graph, Both };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Matrix: return "matrix";
        case Method::Graph: return "graph";
        default: return "both";
    }
}

struct AnalysisReport {
    std::string model;
    Method method = Method::Both;
    Verdict verdict = Verdict::UnconditionallyBinomial;
    std::size_t species = 0;
    std::size_t reactions = 0;
    std::optional<double> matrix_ms;  // measured at nanosecond resolution
    std::optional<double> graph_ms;
    std::optional<bool> agreement;    // present iff both methods ran

    // Diagnostics.
    std::vector<std::string> violating_species;   // matrix method
    std::optional<ComponentSummary> components;   // graph method
};

/// The two methods decided differently: an implementation bug by
/// construction, never a valid analysis outcome.
class MethodDisagreement : public std::runtime_error {
public:
    MethodDisagreement(const std::string& model, std::string matrix_trace,
                       std::string graph_trace)
        : std::runtime_error("method disagreement on model '" + model + "'"),
          matrix_trace_(std::move(matrix_trace)),
          graph_trace_(std::move(graph_trace)) {}

    const std::string& matrix_trace() const { return matrix_trace_; }
    const std::string& graph_trace() const { return graph_trace_; }

private:
    std::string matrix_trace_;
    std::string graph_trace_;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    /// Elapsed wall-clock milliseconds, clamped away from zero so timing
    /// columns stay positive even below clock resolution.
    double elapsed_ms() const {
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        return std::max<long long>(ns, 1) / 1e6;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string describe_components(const ComponentSummary& summary, const SRGraph& g) {
    std::ostringstream out;
    for (const auto& comp : summary.components) {
        out << "  {";
        bool first = true;
        for (auto s : comp.species) {
            out << (first ? "" : ", ") << g.species_name(s);
            first = false;
        }
        for (auto r : comp.reactions) {
            out << (first ? "" : ", ") << g.reaction_name(r);
            first = false;
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace detail

/// Runs the requested method(s) on an already-parsed network. Timing wraps
/// the algorithms only, never parsing or report I/O. When both methods run,
/// their verdicts must agree; a mismatch throws MethodDisagreement carrying
/// both diagnostic traces.
inline AnalysisReport analyze(const std::string& model_name, const ReactionNetwork& net,
                              Method method = Method::Both) {
    AnalysisReport report;
    report.model = model_name;
    report.method = method;
    report.species = net.species_count();
    report.reactions = net.reaction_count();

    std::optional<Verdict> matrix_verdict, graph_verdict;
    std::string matrix_trace, graph_trace;

    if (method == Method::Matrix || method == Method::Both) {
        detail::Stopwatch timer;
        const BinomialCoefficientMatrix m = build_matrix(net);
        const RrefResult reduced = rref(to_rational(m));
        const MatrixCheck check = is_unconditionally_binomial_matrix(reduced, m.row_labels);
        report.matrix_ms = timer.elapsed_ms();
        matrix_verdict = check.verdict;
        report.violating_species = check.violating_species;
        matrix_trace = "final RREF:\n" +
                       format_matrix_table(reduced.matrix, m.row_labels, m.col_labels);
    }
    if (method == Method::Graph || method == Method::Both) {
        detail::Stopwatch timer;
        const SRGraph final_graph = transform(create_graph(net));
        GraphCheck check = is_unconditionally_binomial_graph(final_graph);
        report.graph_ms = timer.elapsed_ms();
        graph_verdict = check.verdict;
        graph_trace =
            "final graph components:\n" + detail::describe_components(check.summary, final_graph);
        report.components = std::move(check.summary);
    }

    if (matrix_verdict && graph_verdict) {
        report.agreement = *matrix_verdict == *graph_verdict;
        if (!*report.agreement)
            throw MethodDisagreement(model_name, matrix_trace, graph_trace);
    }
    report.verdict = matrix_verdict ? *matrix_verdict : *graph_verdict;
    return report;
}

}  // namespace crnbinom
