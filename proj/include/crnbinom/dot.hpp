#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "crnbinom/graph.hpp"

namespace crnbinom {

namespace detail {

inline std::string dot_identifier(const std::string& name) {
    std::string id;
    for (char c : name)
        id += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
    if (id.empty() || std::isdigit(static_cast<unsigned char>(id.front()))) id = "g_" + id;
    return id;
}

}  // namespace detail

/// Graphviz rendering: species vertices as circles, reaction vertices as
/// boxes, edge labels as exact rationals. Marked species are filled. Output
/// is deterministic: species, then reactions, then edges ascending.
inline std::string to_dot(const SRGraph& g, const std::string& graph_name = "srgraph") {
    std::ostringstream out;
    out << "graph " << detail::dot_identifier(graph_name) << " {\n";
    for (std::uint32_t s = 0; s < g.species_count(); ++s) {
        out << "  s" << s << " [label=\"" << g.species_name(s) << "\", shape=circle";
        if (g.marked(s)) out << ", style=filled";
        out << "];\n";
    }
    for (std::uint32_t r = 0; r < g.reaction_count(); ++r)
        out << "  r" << r << " [label=\"" << g.reaction_name(r) << "\", shape=box];\n";
    for (std::uint32_t s = 0; s < g.species_count(); ++s)
        for (std::uint32_t r : g.connected_reactions(s))
            out << "  s" << s << " -- r" << r << " [label=\"" << to_string(g.label(s, r))
                << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace crnbinom
