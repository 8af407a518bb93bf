#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crnbinom/matrix.hpp"
#include "crnbinom/network.hpp"
#include "crnbinom/rational.hpp"
#include "crnbinom/verdict.hpp"

namespace crnbinom {

/// Bipartite undirected graph of species vertices and reaction vertices.
/// Edges carry nonzero rational labels; a zero label is never stored. Labels
/// are mirrored in both adjacency maps and kept in sync by the mutators.
class SRGraph {
public:
    SRGraph() = default;
    SRGraph(std::vector<std::string> species_names, std::vector<std::string> reaction_names,
            std::vector<std::uint32_t> reaction_ids)
        : species_names_(std::move(species_names)),
          reaction_names_(std::move(reaction_names)),
          reaction_ids_(std::move(reaction_ids)),
          marked_(species_names_.size(), false),
          species_adj_(species_names_.size()),
          reaction_adj_(reaction_names_.size()) {}

    std::size_t species_count() const { return species_names_.size(); }
    std::size_t reaction_count() const { return reaction_names_.size(); }
    const std::string& species_name(std::uint32_t s) const { return species_names_[s]; }
    const std::string& reaction_name(std::uint32_t r) const { return reaction_names_[r]; }
    const std::vector<std::string>& species_names() const { return species_names_; }

    /// Network reaction index behind a reaction vertex.
    std::uint32_t reaction_id(std::uint32_t r) const { return reaction_ids_[r]; }

    bool marked(std::uint32_t s) const { return marked_[s]; }
    void set_mark(std::uint32_t s, bool value) { marked_[s] = value; }

    bool connected(std::uint32_t s, std::uint32_t r) const {
        return species_adj_[s].count(r) != 0;
    }

    /// Label of an existing edge.
    const Rational& label(std::uint32_t s, std::uint32_t r) const {
        return species_adj_[s].at(r);
    }

    /// Inserts or overwrites; zero labels erase instead.
    void set_edge(std::uint32_t s, std::uint32_t r, Rational value) {
        if (value == 0) {
            remove_edge(s, r);
            return;
        }
        reaction_adj_[r][s] = value;
        species_adj_[s][r] = std::move(value);
    }

    void remove_edge(std::uint32_t s, std::uint32_t r) {
        species_adj_[s].erase(r);
        reaction_adj_[r].erase(s);
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& adj : species_adj_) n += adj.size();
        return n;
    }

    std::size_t degree_of_species(std::uint32_t s) const { return species_adj_[s].size(); }

    /// Species neighbors of a reaction vertex, ascending.
    std::vector<std::uint32_t> connected_species(std::uint32_t r) const {
        return sorted_keys(reaction_adj_[r]);
    }

    /// Reaction neighbors of a species vertex, ascending.
    std::vector<std::uint32_t> connected_reactions(std::uint32_t s) const {
        return sorted_keys(species_adj_[s]);
    }

private:
    static std::vector<std::uint32_t> sorted_keys(
        const std::unordered_map<std::uint32_t, Rational>& adj) {
        std::vector<std::uint32_t> keys;
        keys.reserve(adj.size());
        for (const auto& [k, v] : adj) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    std::vector<std::string> species_names_;
    std::vector<std::string> reaction_names_;
    std::vector<std::uint32_t> reaction_ids_;
    std::vector<bool> marked_;
    std::vector<std::unordered_map<std::uint32_t, Rational>> species_adj_;
    std::vector<std::unordered_map<std::uint32_t, Rational>> reaction_adj_;
};

/// One species vertex per species, one reaction vertex per non-degenerate
/// reaction; edge (s, r) present iff the stoichiometric difference of s
/// across r is nonzero, labeled with that integer. All marks start false.
inline SRGraph create_graph(const ReactionNetwork& net) {
    std::vector<std::string> reaction_names;
    std::vector<std::uint32_t> reaction_ids;
    for (const auto& rx : net.reactions) {
        if (rx.degenerate()) continue;
        reaction_ids.push_back(rx.index);
        reaction_names.push_back("r" + std::to_string(reaction_ids.size()));
    }
    SRGraph g(net.species_names(), std::move(reaction_names), std::move(reaction_ids));
    for (std::uint32_t r = 0; r < g.reaction_count(); ++r) {
        const auto& rx = net.reactions[g.reaction_id(r)];
        for (const Complex* side : {&rx.reactant, &rx.product})
            for (const auto& [species, coeff] : side->terms()) {
                (void)coeff;
                const long long c = species_coefficient(rx, species);
                if (c != 0) g.set_edge(species, r, rational_of(c));
            }
    }
    return g;
}

struct TransformStep {
    std::uint32_t reaction_vertex = 0;
    std::optional<std::uint32_t> pivot_species;  // empty when the vertex was skipped
};

using TransformObserver = std::function<void(const SRGraph&, const TransformStep&)>;

/// Edge-rewriting pass: every reaction vertex is visited exactly once, in
/// ascending order. At each vertex the smallest-index unmarked species
/// neighbor becomes the pivot; the vertex's other edges are eliminated and
/// the effect is propagated along the pivot species' remaining edges. A
/// vertex with no unmarked neighbor is skipped. The observer, if given, runs
/// after every vertex (skips included).
inline SRGraph transform(SRGraph g, const TransformObserver& observer = {}) {
    for (std::uint32_t r = 0; r < g.reaction_count(); ++r) {
        const std::vector<std::uint32_t> neighbors = g.connected_species(r);
        std::optional<std::uint32_t> pivot;
        for (std::uint32_t s : neighbors)
            if (!g.marked(s)) {
                pivot = s;
                break;
            }
        if (!pivot) {
            if (observer) observer(g, {r, std::nullopt});
            continue;
        }
        const std::uint32_t cs = *pivot;
        g.set_mark(cs, true);
        const Rational pivot_label = g.label(cs, r);
        for (std::uint32_t other : neighbors) {
            if (other == cs) continue;
            const Rational mult = -g.label(other, r) / pivot_label;
            g.remove_edge(other, r);
            for (std::uint32_t rx : g.connected_reactions(cs)) {
                if (rx == r) continue;
                if (g.connected(other, rx)) {
                    Rational cf = g.label(cs, rx) * mult + g.label(other, rx);
                    if (cf != 0)
                        g.set_edge(other, rx, std::move(cf));
                    else
                        g.remove_edge(other, rx);
                } else {
                    g.set_edge(other, rx, g.label(cs, rx) * mult);
                }
            }
        }
        if (observer) observer(g, {r, cs});
    }
    return g;
}

struct ComponentSummary {
    struct Component {
        std::vector<std::uint32_t> species;
        std::vector<std::uint32_t> reactions;
    };
    std::vector<Component> components;
    /// Reaction vertices whose every incident edge was eliminated. They do
    /// not constrain any species row, so they never fail the verdict; they
    /// are surfaced here for diagnostics.
    std::vector<std::uint32_t> isolated_reaction_vertices;
};

inline ComponentSummary connected_components(const SRGraph& g) {
    ComponentSummary summary;
    const std::size_t n = g.species_count();
    std::vector<bool> seen_species(n, false), seen_reaction(g.reaction_count(), false);
    auto explore = [&](bool species_root, std::uint32_t root) {
        ComponentSummary::Component comp;
        std::vector<std::pair<bool, std::uint32_t>> stack{{species_root, root}};
        (species_root ? seen_species : seen_reaction)[root] = true;
        while (!stack.empty()) {
            auto [is_species, v] = stack.back();
            stack.pop_back();
            if (is_species) {
                comp.species.push_back(v);
                for (std::uint32_t r : g.connected_reactions(v))
                    if (!seen_reaction[r]) {
                        seen_reaction[r] = true;
                        stack.emplace_back(false, r);
                    }
            } else {
                comp.reactions.push_back(v);
                for (std::uint32_t s : g.connected_species(v))
                    if (!seen_species[s]) {
                        seen_species[s] = true;
                        stack.emplace_back(true, s);
                    }
            }
        }
        std::sort(comp.species.begin(), comp.species.end());
        std::sort(comp.reactions.begin(), comp.reactions.end());
        summary.components.push_back(std::move(comp));
    };
    for (std::uint32_t s = 0; s < n; ++s)
        if (!seen_species[s]) explore(true, s);
    for (std::uint32_t r = 0; r < g.reaction_count(); ++r)
        if (!seen_reaction[r]) explore(false, r);
    for (const auto& comp : summary.components)
        if (comp.species.empty())
            for (std::uint32_t r : comp.reactions)
                summary.isolated_reaction_vertices.push_back(r);
    return summary;
}

struct GraphCheck {
    Verdict verdict = Verdict::UnconditionallyBinomial;
    ComponentSummary summary;
    std::vector<std::size_t> violating_components;
};

/// Component criterion on the transformed graph: every component holding a
/// species vertex must be a single species vertex, or one species vertex
/// joined to one reaction vertex. Isolated reaction vertices pass.
inline GraphCheck is_unconditionally_binomial_graph(const SRGraph& transformed) {
    GraphCheck check;
    check.summary = connected_components(transformed);
    for (std::size_t i = 0; i < check.summary.components.size(); ++i) {
        const auto& comp = check.summary.components[i];
        if (comp.species.empty()) continue;
        const bool ok = comp.species.size() == 1 && comp.reactions.size() <= 1;
        if (!ok) check.violating_components.push_back(i);
    }
    if (!check.violating_components.empty())
        check.verdict = Verdict::NotUnconditionallyBinomial;
    return check;
}

/// Edge labels laid out as a matrix: species rows, reaction-vertex columns,
/// zero where no edge. Inverse of the edge construction in create_graph.
inline RationalMatrix graph_to_matrix(const SRGraph& g) {
    RationalMatrix m(g.species_count(), g.reaction_count());
    for (std::uint32_t s = 0; s < g.species_count(); ++s)
        for (std::uint32_t r : g.connected_reactions(s)) m.at(s, r) = g.label(s, r);
    return m;
}

}  // namespace crnbinom
