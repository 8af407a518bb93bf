#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crnbinom {

struct SpeciesId {
    std::uint32_t index = 0;
    std::string name;

    friend bool operator==(const SpeciesId&, const SpeciesId&) = default;
};

/// One side of a reaction: a formal non-negative integer combination of
/// species. Zero coefficients are never stored; the empty complex is valid
/// and stands for "no species".
class Complex {
public:
    Complex() = default;

    /// Adds `count` units of a species, accumulating over repeated calls.
    /// Adding zero is a no-op.
    void add(std::uint32_t species, std::uint32_t count) {
        if (count == 0) return;
        auto& sum = terms_[species];
        if (sum > std::numeric_limits<std::uint32_t>::max() - count)
            throw std::overflow_error("stoichiometric coefficient overflow");
        sum += count;
    }

    std::uint32_t coeff(std::uint32_t species) const {
        auto it = terms_.find(species);
        return it == terms_.end() ? 0 : it->second;
    }

    bool contains(std::uint32_t species) const { return terms_.count(species) != 0; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Stored terms, ascending by species index; every coefficient >= 1.
    const std::map<std::uint32_t, std::uint32_t>& terms() const { return terms_; }

    friend bool operator==(const Complex&, const Complex&) = default;

private:
    std::map<std::uint32_t, std::uint32_t> terms_;
};

struct ReversibleReaction {
    std::uint32_t index = 0;
    Complex reactant;
    Complex product;
    std::string forward_label;   // rate constant of reactant -> product
    std::string backward_label;  // rate constant of product -> reactant

    /// Reactant and product coincide as multisets. Such a reaction carries
    /// no information: it gets no matrix column and no graph edges.
    bool degenerate() const { return reactant == product; }
};

struct ReactionNetwork {
    std::vector<SpeciesId> species;
    std::vector<ReversibleReaction> reactions;

    std::size_t species_count() const { return species.size(); }
    std::size_t reaction_count() const { return reactions.size(); }

    const std::string& species_name(std::uint32_t index) const {
        return species.at(index).name;
    }

    std::vector<std::string> species_names() const {
        std::vector<std::string> names;
        names.reserve(species.size());
        for (const auto& s : species) names.push_back(s.name);
        return names;
    }
};

/// Checks the structural invariants; throws std::logic_error on violation.
/// Parsing and generation both go through this before handing a network out.
inline void validate(const ReactionNetwork& net) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < net.species.size(); ++i) {
        if (net.species[i].index != i)
            throw std::logic_error("species index does not match list position");
        if (net.species[i].name.empty()) throw std::logic_error("empty species name");
        if (!names.insert(net.species[i].name).second)
            throw std::logic_error("duplicate species name: " + net.species[i].name);
    }
    if (net.reactions.empty()) throw std::logic_error("network has no reactions");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < net.reactions.size(); ++i) {
        const auto& rx = net.reactions[i];
        if (rx.index != i) throw std::logic_error("reaction index does not match position");
        for (const Complex* c : {&rx.reactant, &rx.product})
            for (const auto& [s, coeff] : c->terms())
                if (s >= net.species.size())
                    throw std::logic_error("reaction references unknown species");
        for (const std::string* l : {&rx.forward_label, &rx.backward_label}) {
            if (l->empty()) throw std::logic_error("empty rate label");
            if (!labels.insert(*l).second)
                throw std::logic_error("duplicate rate label: " + *l);
        }
    }
}

inline std::string complex_to_dsl(const Complex& c, const ReactionNetwork& net) {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [species, coeff] : c.terms()) {
        if (!first) out << " + ";
        first = false;
        if (coeff != 1) out << coeff << ' ';
        out << net.species_name(species);
    }
    return out.str();
}

/// Renders a network back into the DSL, one reaction per line. Reparsing the
/// result reproduces the species order and the reaction complexes.
inline std::string to_dsl(const ReactionNetwork& net) {
    std::ostringstream out;
    for (const auto& rx : net.reactions)
        out << complex_to_dsl(rx.reactant, net) << " <=> "
            << complex_to_dsl(rx.product, net) << '\n';
    return out.str();
}

}  // namespace crnbinom
