#include <catch2/catch_amalgamated.hpp>

#include <crnbinom/dot.hpp>
#include <crnbinom/graph.hpp>
#include <crnbinom/parse.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using crnbinom::Rational;
using crnbinom::SRGraph;
using crnbinom::Verdict;
using crnbinom::build_matrix;
using crnbinom::create_graph;
using crnbinom::graph_to_matrix;
using crnbinom::is_unconditionally_binomial_graph;
using crnbinom::to_rational;
using crnbinom::transform;

TEST_CASE("create_graph on the figure example") {
    // 2A+B <=> C <=> A <=> 2B: species A=0, B=1, C=2.
    const auto g = create_graph(fixtures::example2());
    CHECK(g.species_count() == 3);
    CHECK(g.reaction_count() == 3);
    CHECK(g.edge_count() == 7);  // one edge per nonzero stoichiometric difference
    CHECK(g.label(0, 0) == 2);   // (A, r1)
    CHECK(g.label(2, 0) == -1);  // (C, r1)
    CHECK(g.label(1, 2) == -2);  // (B, r3)
    CHECK_FALSE(g.connected(1, 1));
    for (std::uint32_t s = 0; s < 3; ++s) CHECK_FALSE(g.marked(s));
}

TEST_CASE("create_graph mirrors the coefficient matrix") {
    for (const auto& net : {fixtures::intro(), fixtures::example2(), fixtures::example3()}) {
        const auto g = create_graph(net);
        CHECK(oracle::to_rows(graph_to_matrix(g)) ==
              oracle::to_rows(to_rational(build_matrix(net))));
    }
}

TEST_CASE("degenerate reactions produce no vertices or edges") {
    const auto g = create_graph(crnbinom::parse_network("A <=> A\n").network);
    CHECK(g.species_count() == 1);
    CHECK(g.reaction_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(graph_to_matrix(g).rows() == 1);
    CHECK(graph_to_matrix(g).cols() == 0);
    CHECK(is_unconditionally_binomial_graph(transform(g)).verdict ==
          Verdict::UnconditionallyBinomial);
}

TEST_CASE("transform of the intro network isolates two pivot pairs") {
    const auto g = transform(create_graph(fixtures::intro()));
    const auto check = is_unconditionally_binomial_graph(g);
    CHECK(check.verdict == Verdict::UnconditionallyBinomial);
    std::size_t pairs = 0, lone_species = 0;
    for (const auto& comp : check.summary.components) {
        if (comp.species.size() == 1 && comp.reactions.size() == 1) ++pairs;
        if (comp.species.size() == 1 && comp.reactions.empty()) ++lone_species;
    }
    CHECK(pairs == 2);
    CHECK(lone_species == 2);
}

TEST_CASE("transform of the chain example leaves a 2-species 3-reaction component") {
    const auto g = transform(create_graph(fixtures::example3()));
    const auto check = is_unconditionally_binomial_graph(g);
    CHECK(check.verdict == Verdict::NotUnconditionallyBinomial);
    REQUIRE(check.violating_components.size() == 1);
    const auto& comp = check.summary.components[check.violating_components[0]];
    CHECK(comp.species.size() == 2);
    CHECK(comp.reactions.size() == 3);
    // The two entangled species are B and C.
    CHECK(g.species_name(comp.species[0]) == "B");
    CHECK(g.species_name(comp.species[1]) == "C");
}

TEST_CASE("transform of a single reaction leaves one pair and one lone vertex") {
    const auto g = transform(create_graph(crnbinom::parse_network("A <=> B").network));
    const auto summary = crnbinom::connected_components(g);
    REQUIRE(summary.components.size() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.marked(0));       // A was the pivot
    CHECK_FALSE(g.marked(1));
    CHECK(is_unconditionally_binomial_graph(g).verdict == Verdict::UnconditionallyBinomial);
}

TEST_CASE("every reaction vertex is visited exactly once and no zero edge survives") {
    for (const char* text : {fixtures::kIntro, fixtures::kExample2, fixtures::kExample3}) {
        const auto net = crnbinom::parse_network(text).network;
        const auto initial = create_graph(net);
        std::size_t steps = 0;
        std::size_t marked_pivots = 0;
        transform(initial, [&](const SRGraph& g, const crnbinom::TransformStep& step) {
            ++steps;
            CHECK(step.reaction_vertex == steps - 1);
            if (step.pivot_species) ++marked_pivots;
            for (std::uint32_t s = 0; s < g.species_count(); ++s)
                for (std::uint32_t r : g.connected_reactions(s)) CHECK(g.label(s, r) != 0);
        });
        CHECK(steps == initial.reaction_count());
        CHECK(marked_pivots == crnbinom::rref(to_rational(build_matrix(net))).rank);
    }
}

TEST_CASE("row space of the final graph equals the rref row space") {
    for (const char* text : {fixtures::kIntro, fixtures::kExample2, fixtures::kExample3}) {
        const auto net = crnbinom::parse_network(text).network;
        const auto final_matrix = graph_to_matrix(transform(create_graph(net)));
        CHECK(oracle::to_rows(crnbinom::rref(final_matrix).matrix) ==
              oracle::to_rows(crnbinom::rref(to_rational(build_matrix(net))).matrix));
    }
}

TEST_CASE("component summaries partition the vertex set") {
    const auto g = transform(create_graph(fixtures::example3()));
    const auto summary = crnbinom::connected_components(g);
    std::size_t species_total = 0, reaction_total = 0;
    for (const auto& comp : summary.components) {
        species_total += comp.species.size();
        reaction_total += comp.reactions.size();
    }
    CHECK(species_total == g.species_count());
    CHECK(reaction_total == g.reaction_count());
}

TEST_CASE("dot export is deterministic and bipartite") {
    const auto dot = crnbinom::to_dot(create_graph(fixtures::example3()), "example3");
    CHECK(dot ==
          "graph example3 {\n"
          "  s0 [label=\"B\", shape=circle];\n"
          "  s1 [label=\"C\", shape=circle];\n"
          "  s2 [label=\"A\", shape=circle];\n"
          "  s3 [label=\"D\", shape=circle];\n"
          "  r0 [label=\"r1\", shape=box];\n"
          "  r1 [label=\"r2\", shape=box];\n"
          "  r2 [label=\"r3\", shape=box];\n"
          "  s0 -- r0 [label=\"3\"];\n"
          "  s0 -- r1 [label=\"-2\"];\n"
          "  s0 -- r2 [label=\"-1\"];\n"
          "  s1 -- r0 [label=\"-2\"];\n"
          "  s1 -- r1 [label=\"2\"];\n"
          "  s2 -- r0 [label=\"-1\"];\n"
          "  s2 -- r1 [label=\"1\"];\n"
          "  s3 -- r1 [label=\"-2\"];\n"
          "  s3 -- r2 [label=\"2\"];\n"
          "}\n");

    // Fractional labels render as exact rationals, marked species as filled.
    auto g = create_graph(crnbinom::parse_network("A <=> B").network);
    g.set_edge(0, 0, Rational(-2, 3));
    g.set_mark(1, true);
    const auto dot2 = crnbinom::to_dot(g, "tiny model!");
    CHECK(dot2.find("graph tiny_model_ {") == 0);
    CHECK(dot2.find("label=\"-2/3\"") != std::string::npos);
    CHECK(dot2.find("s1 [label=\"B\", shape=circle, style=filled];") != std::string::npos);
}
