#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/errors.hpp"
#include "symres/graphs.hpp"

using namespace symres;

TEST_CASE("basic graph ops") {
    Graph g = make_path(4);
    CHECK(g.edges.size() == 3);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK_THROWS_WITH_AS(g.add_edge(1, 1), doctest::Contains("BadEdge"), Error);
    CHECK_THROWS_AS(g.add_edge(0, 2), Error);

    CHECK(make_cycle(5).edges.size() == 5);
    CHECK(make_complete(4).edges.size() == 6);
}

TEST_CASE("components and cycles") {
    Graph g;
    g.n = 6;
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(4, 5);
    auto comps = connected_components(g);
    CHECK(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{1, 2, 3});
    CHECK(comps[2] == std::vector<int>{6});

    CHECK(find_cycle(g).empty());
    g.add_edge(3, 1);
    auto cyc = find_cycle(g);
    REQUIRE(cyc.size() == 3);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));

    CHECK(find_cycle(make_complete(4)).size() >= 3);
    CHECK(find_cycle(make_path(6)).empty());
}

TEST_CASE("coloring and individualization") {
    ColoredGraph cg = uniform_coloring(make_path(3));
    CHECK(cg.color(2) == "*");
    ColoredGraph ind = individualize(cg, 2);
    CHECK(ind.color(2) == "*,1");
    CHECK(ind.color(1) == "*,0");
    // idempotent up to token renaming: the partition is unchanged
    ColoredGraph twice = individualize(ind, 2);
    CHECK((twice.color(2) != twice.color(1)));
    CHECK(twice.color(1) == twice.color(3));
}

TEST_CASE("graph text round trip") {
    std::string text = "graph 3\ne 1 2\ne 2 3\nc 1 red\n";
    ColoredGraph g = parse_graph(text);
    CHECK(g.g.n == 3);
    CHECK(g.g.edges.size() == 2);
    CHECK(g.color(1) == "red");
    CHECK(g.color(3) == "*");
    CHECK(parse_graph(emit_graph(g)).g.edges == g.g.edges);
    CHECK_THROWS_WITH_AS(parse_graph("graf 3"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_AS(parse_graph("graph 2\ne 1 3\n"), Error);
}

TEST_CASE("bipartite format") {
    std::string text = "graph 5\npart v 1\npart v 2\npart w 3\npart w 4\npart w 5\n"
                       "e 1 3\ne 1 4\ne 2 4\ne 2 5\n";
    BipartiteGraph g = parse_bipartite(text);
    CHECK(g.nv == 2);
    CHECK(g.nw == 3);
    CHECK(g.neighborhood(1) == std::vector<int>{1, 2});
    CHECK(g.w_neighborhood(2) == std::vector<int>{1, 2});
    CHECK(g.connected());
    BipartiteGraph again = parse_bipartite(emit_bipartite(g));
    CHECK(again.edges == g.edges);

    CHECK_THROWS_WITH_AS(parse_bipartite("graph 2\ne 1 2\n"),
                         doctest::Contains("NotBipartite"), Error);
    CHECK_THROWS_AS(parse_bipartite("graph 2\npart v 1\npart v 2\ne 1 2\n"), Error);

    BipartiteGraph split;
    split.nv = 2;
    split.nw = 2;
    split.add_edge(1, 1);
    CHECK_FALSE(split.connected());
}
