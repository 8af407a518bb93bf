#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "crnbinom/network.hpp"
#include "crnbinom/polynomial.hpp"

namespace crnbinom {

/// The binomial of a reaction: -k_f * m(reactant) + k_b * m(product), where
/// m() is the complex monomial. Degenerate reactions yield the zero
/// polynomial (their two terms differ only in the rate symbol, and the
/// convention records them as absent everywhere downstream).
inline SymbolicPolynomial associated_binomial(const ReversibleReaction& rx) {
    if (rx.degenerate()) return {};
    const std::uint32_t forward = 2 * rx.index, backward = 2 * rx.index + 1;
    SymbolicPolynomial b =
        SymbolicPolynomial::term(Monomial::rate_symbol(forward), -1) *
        complex_monomial(rx.reactant);
    b += SymbolicPolynomial::term(Monomial::rate_symbol(backward), 1) *
         complex_monomial(rx.product);
    return b;
}

/// Net stoichiometric difference of a species across a reaction:
/// (reactant coefficient) - (product coefficient). The concentration of the
/// species gains c * b for this reaction, with b the associated binomial.
inline long long species_coefficient(const ReversibleReaction& rx, std::uint32_t species) {
    return (long long)(rx.reactant.coeff(species)) - (long long)(rx.product.coeff(species));
}

/// Per-reaction binomials plus their nonzero species coefficients.
/// Degenerate reactions have no entry.
struct BinomialTable {
    struct Entry {
        std::uint32_t reaction = 0;
        SymbolicPolynomial binomial;
        std::map<std::uint32_t, long long> coeffs;  // species -> nonzero c
    };
    std::vector<Entry> entries;
};

inline BinomialTable binomial_table(const ReactionNetwork& net) {
    BinomialTable table;
    for (const auto& rx : net.reactions) {
        if (rx.degenerate()) continue;
        BinomialTable::Entry entry;
        entry.reaction = rx.index;
        entry.binomial = associated_binomial(rx);
        for (const Complex* c : {&rx.reactant, &rx.product})
            for (const auto& [species, coeff] : c->terms()) {
                (void)coeff;
                const long long value = species_coefficient(rx, species);
                if (value != 0) entry.coeffs[species] = value;
            }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

/// Steady-state right-hand sides p_1..p_n, assembled as the coefficient
/// combination of the reaction binomials: p_k = sum_rx c(rx,k) * b(rx).
inline std::vector<SymbolicPolynomial> steady_state_polynomials(const ReactionNetwork& net) {
    std::vector<SymbolicPolynomial> rhs(net.species_count());
    for (const auto& entry : binomial_table(net).entries)
        for (const auto& [species, c] : entry.coeffs)
            rhs[species] += entry.binomial * rational_of(c);
    return rhs;
}

/// Mass-action right-hand sides built term by term from raw kinetics:
/// each reaction contributes net-change * (k_f * m(reactant)) and
/// net-change * (-k_b * m(product)) per species. Deliberately shares no code
/// with the binomial-table route; the two are cross-checked below.
inline std::vector<SymbolicPolynomial> mass_action_rhs(const ReactionNetwork& net) {
    std::vector<SymbolicPolynomial> rhs(net.species_count());
    for (const auto& rx : net.reactions) {
        Monomial forward_flux = Monomial::rate_symbol(2 * rx.index);
        for (const auto& [s, c] : rx.reactant.terms()) forward_flux.species.emplace_back(s, c);
        Monomial backward_flux = Monomial::rate_symbol(2 * rx.index + 1);
        for (const auto& [s, c] : rx.product.terms()) backward_flux.species.emplace_back(s, c);
        for (const Complex* side : {&rx.reactant, &rx.product})
            for (const auto& [species, coeff] : side->terms()) {
                (void)coeff;
                if (side == &rx.product && rx.reactant.contains(species))
                    continue;  // already handled from the reactant side
                const long long change = (long long)(rx.product.coeff(species)) -
                                         (long long)(rx.reactant.coeff(species));
                if (change == 0) continue;
                rhs[species].add_term(forward_flux, rational_of(change));
                rhs[species].add_term(backward_flux, rational_of(-change));
            }
    }
    return rhs;
}

/// True iff the binomial combination reproduces the raw mass-action ODE
/// right-hand sides exactly, species by species.
inline bool verify_decomposition(const ReactionNetwork& net) {
    return steady_state_polynomials(net) == mass_action_rhs(net);
}

}  // namespace crnbinom
