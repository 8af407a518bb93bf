#pragma once

#include <json.hpp>

#include "crnbinom/analyze.hpp"
#include "crnbinom/bench.hpp"
#include "crnbinom/graph.hpp"
#include "crnbinom/matrix.hpp"

namespace crnbinom {

/// Matrix as JSON with entries rendered as exact-rational strings.
inline nlohmann::json to_json(const RationalMatrix& m,
                              const std::vector<std::string>& row_labels,
                              const std::vector<std::string>& col_labels) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"rows", row_labels}, {"cols", col_labels}, {"entries", std::move(entries)}};
}

inline nlohmann::json to_json(const BinomialCoefficientMatrix& m) {
    return to_json(to_rational(m), m.row_labels, m.col_labels);
}

inline nlohmann::json to_json(const ComponentSummary& summary, const SRGraph& g) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& comp : summary.components) {
        nlohmann::json species = nlohmann::json::array();
        for (auto s : comp.species) species.push_back(g.species_name(s));
        nlohmann::json reactions = nlohmann::json::array();
        for (auto r : comp.reactions) reactions.push_back(g.reaction_name(r));
        components.push_back(
            {{"species", std::move(species)}, {"reactions", std::move(reactions)}});
    }
    nlohmann::json isolated = nlohmann::json::array();
    for (auto r : summary.isolated_reaction_vertices) isolated.push_back(g.reaction_name(r));
    return {{"components", std::move(components)},
            {"isolated_reaction_vertices", std::move(isolated)}};
}

namespace detail {

inline nlohmann::json components_json(const ComponentSummary& summary) {
    // Name-free variant used when the graph is no longer around: vertex ids.
    nlohmann::json components = nlohmann::json::array();
    for (const auto& comp : summary.components)
        components.push_back({{"species", comp.species}, {"reactions", comp.reactions}});
    return {{"components", std::move(components)},
            {"isolated_reaction_vertices", summary.isolated_reaction_vertices}};
}

}  // namespace detail

inline nlohmann::json to_json(const AnalysisReport& report) {
    nlohmann::json j{{"model", report.model},
                     {"method", to_string(report.method)},
                     {"verdict", to_string(report.verdict)},
                     {"species", report.species},
                     {"reactions", report.reactions}};
    if (report.matrix_ms) j["t_matrix_ms"] = *report.matrix_ms;
    if (report.graph_ms) j["t_graph_ms"] = *report.graph_ms;
    if (report.agreement) j["agreement"] = *report.agreement;
    nlohmann::json diagnostics;
    diagnostics["violating_species"] = report.violating_species;
    if (report.components) diagnostics["graph"] = detail::components_json(*report.components);
    j["diagnostics"] = std::move(diagnostics);
    return j;
}

inline nlohmann::json to_json(const BenchReport& report) {
    nlohmann::json models = nlohmann::json::array();
    for (const auto& r : report.reports) models.push_back(to_json(r));
    nlohmann::json errors = nlohmann::json::array();
    for (const auto& e : report.errors)
        errors.push_back({{"model", e.model}, {"error", e.message}});
    nlohmann::json summary{{"models", report.rows.size()}};
    if (report.median_speedup) summary["median_speedup"] = *report.median_speedup;
    return {{"models", std::move(models)},
            {"errors", std::move(errors)},
            {"summary", std::move(summary)}};
}

}  // namespace crnbinom
