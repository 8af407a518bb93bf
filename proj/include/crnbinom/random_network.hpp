#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "crnbinom/network.hpp"

namespace crnbinom {

struct RandomNetworkSpec {
    std::uint64_t seed = 0;
    std::uint32_t min_species = 2;
    std::uint32_t max_species = 6;
    std::uint32_t min_reactions = 1;
    std::uint32_t max_reactions = 6;
    std::uint32_t max_coefficient = 3;
    std::uint32_t max_complex_size = 3;  // distinct species per complex
};

namespace detail {

/// Unbiased draw from [0, n). Hand-rolled so that a seed pins the byte-exact
/// output independent of the standard library's distribution choices.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % n;
}

inline Complex random_complex(std::mt19937_64& rng, std::uint32_t species_count,
                              const RandomNetworkSpec& spec) {
    const auto size = std::uint32_t(
        next_below(rng, std::min(spec.max_complex_size, species_count) + 1));
    Complex c;
    std::vector<std::uint32_t> pool(species_count);
    for (std::uint32_t i = 0; i < species_count; ++i) pool[i] = i;
    for (std::uint32_t t = 0; t < size; ++t) {
        const auto pick = std::size_t(next_below(rng, pool.size()));
        const std::uint32_t species = pool[pick];
        pool[pick] = pool.back();
        pool.pop_back();
        c.add(species, 1 + std::uint32_t(next_below(rng, spec.max_coefficient)));
    }
    return c;
}

}  // namespace detail

inline void validate(const RandomNetworkSpec& spec) {
    if (spec.min_species == 0 || spec.min_species > spec.max_species)
        throw std::invalid_argument("species range is empty");
    if (spec.min_reactions == 0 || spec.min_reactions > spec.max_reactions)
        throw std::invalid_argument("reaction range is empty");
    if (spec.max_coefficient == 0) throw std::invalid_argument("max coefficient must be >= 1");
    if (spec.max_complex_size == 0)
        throw std::invalid_argument("max complex size must be >= 1");
}

/// Deterministic per seed. Guarantees reactant != product for every reaction
/// and that every species occurs in at least one reaction. Species end up
/// numbered and named (X1, X2, ...) in first-appearance order, so emitting
/// the network as DSL and reparsing reproduces it.
inline ReactionNetwork generate_random(const RandomNetworkSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    const auto n = std::uint32_t(spec.min_species +
                                 detail::next_below(rng, spec.max_species - spec.min_species + 1));
    const auto r = std::uint32_t(
        spec.min_reactions + detail::next_below(rng, spec.max_reactions - spec.min_reactions + 1));

    std::vector<std::pair<Complex, Complex>> reactions(r);
    for (auto& [reactant, product] : reactions) {
        reactant = detail::random_complex(rng, n, spec);
        for (int attempt = 0; attempt < 64; ++attempt) {
            product = detail::random_complex(rng, n, spec);
            if (!(product == reactant)) break;
        }
        if (product == reactant) {
            // Degenerate draws exhausted; force a difference at one species.
            const auto s = std::uint32_t(detail::next_below(rng, n));
            Complex fixed;
            for (const auto& [sp, c] : product.terms())
                if (sp != s) fixed.add(sp, c);
            if (product.coeff(s) == 0) fixed.add(s, 1);
            product = fixed;
        }
    }

    // Any species missing from every reaction joins a random reactant.
    std::vector<bool> used(n, false);
    for (const auto& [reactant, product] : reactions) {
        for (const auto& [s, c] : reactant.terms()) used[s] = true;
        for (const auto& [s, c] : product.terms()) used[s] = true;
    }
    for (std::uint32_t s = 0; s < n; ++s) {
        if (used[s]) continue;
        auto& [reactant, product] = reactions[detail::next_below(rng, r)];
        reactant.add(s, 1);  // s is absent from product, so the pair stays distinct
    }

    // Renumber species by first appearance so the DSL round-trip is exact.
    std::vector<std::uint32_t> renumber(n, n);
    std::uint32_t next_id = 0;
    auto visit = [&](const Complex& c) {
        for (const auto& [s, coeff] : c.terms())
            if (renumber[s] == n) renumber[s] = next_id++;
    };
    for (const auto& [reactant, product] : reactions) visit(reactant), visit(product);

    ReactionNetwork net;
    net.species.resize(n);
    for (std::uint32_t i = 0; i < n; ++i)
        net.species[renumber[i]] = {renumber[i], "X" + std::to_string(renumber[i] + 1)};
    for (std::uint32_t i = 0; i < r; ++i) {
        ReversibleReaction rx;
        rx.index = i;
        for (const auto& [s, c] : reactions[i].first.terms()) rx.reactant.add(renumber[s], c);
        for (const auto& [s, c] : reactions[i].second.terms()) rx.product.add(renumber[s], c);
        rx.forward_label = "k" + std::to_string(2 * i + 1) + std::to_string(2 * i + 2);
        rx.backward_label = "k" + std::to_string(2 * i + 2) + std::to_string(2 * i + 1);
        net.reactions.push_back(std::move(rx));
    }
    validate(net);
    return net;
}

}  // namespace crnbinom
