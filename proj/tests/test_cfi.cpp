#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/cfi.hpp"
#include "symres/errors.hpp"
#include "symres/oracle.hpp"

using namespace symres;

TEST_CASE("gadget structure") {
    Gadget g3 = cfi_gadget(3);
    CHECK(g3.graph.g.n == 10); // 6 feet + 4 middles
    CHECK(g3.middles.size() == 4);
    // m_S adjacent to a_w for w in S, b_w otherwise
    for (std::size_t i = 0; i < g3.middles.size(); ++i)
        for (int w = 1; w <= 3; ++w) {
            bool in = g3.middles[i].count(w) > 0;
            CHECK(g3.graph.g.has_edge(g3.mid(i), in ? g3.a(w) : g3.b(w)));
            CHECK_FALSE(g3.graph.g.has_edge(g3.mid(i), in ? g3.b(w) : g3.a(w)));
        }
    CHECK_THROWS_WITH_AS(cfi_gadget(13), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("gadget automorphisms are the even swap-sets") {
    CHECK(gadget_automorphisms(1) == std::vector<std::set<int>>{{}});
    auto aut3 = gadget_automorphisms(3);
    CHECK(aut3.size() == 4);
    CHECK(std::count(aut3.begin(), aut3.end(), std::set<int>{1, 2}) == 1);
    for (int n = 1; n <= 3; ++n) { // n = 3 is 10 vertices, the oracle's comfort zone
        // brute force agrees: 2^(n-1) color-preserving automorphisms
        auto brute = automorphisms_bruteforce(cfi_gadget(n).graph);
        CHECK(brute.size() == (std::size_t{1} << (n - 1)));
        CHECK(gadget_automorphisms(n).size() == brute.size());
    }
}

TEST_CASE("cfi pair construction") {
    Graph tri = make_complete(3);
    auto [x, xt] = cfi_pair(tri, make_edge(1, 2));
    CHECK(x.graph.g.n == 18);
    CHECK(xt.graph.g.n == 18);
    CHECK_FALSE(x.twist.has_value());
    CHECK(xt.twist == make_edge(1, 2));
    // crossed pair edges at the twist, parallel elsewhere
    Edge e12 = make_edge(1, 2), e13 = make_edge(1, 3);
    CHECK(xt.graph.g.has_edge(xt.a(1, e12), xt.b(2, e12)));
    CHECK_FALSE(xt.graph.g.has_edge(xt.a(1, e12), xt.a(2, e12)));
    CHECK(xt.graph.g.has_edge(xt.a(1, e13), xt.a(3, e13)));
    CHECK(x.graph.g.has_edge(x.a(1, e12), x.a(2, e12)));

    CHECK_THROWS_WITH_AS(cfi_pair(Graph{}, {1, 2}), doctest::Contains("NoEdge"), Error);
    CHECK_THROWS_AS(cfi_pair(make_path(3), make_edge(1, 3)), Error);
}

TEST_CASE("single edge pair: not isomorphic, and twists are equivalent") {
    Graph g = make_path(2);
    auto [x, xt] = cfi_pair(g, make_edge(1, 2));
    CHECK(x.graph.g.n == 6);
    CHECK(iso_bruteforce(x.graph, xt.graph).empty());

    Graph p3 = make_path(3);
    auto xt1 = cfi_instance(p3, make_edge(1, 2));
    auto xt2 = cfi_instance(p3, make_edge(2, 3));
    // 12 vertices is past the iso oracle's cap; the encoding stands in for it
    CHECK(satisfiable(encode_iso(xt1.graph, xt2.graph)));
    CHECK_FALSE(satisfiable(encode_iso(cfi_instance(p3, std::nullopt).graph, xt1.graph)));
}

TEST_CASE("iso encoding") {
    ColoredGraph a = uniform_coloring(make_path(2));
    CnfFormula f = encode_iso(a, a);
    CHECK(satisfiable(f));
    auto models = iso_bruteforce(a, a);
    CHECK(models.size() == 2);

    // edge vs non-edge contributes a Type-3 clause
    ColoredGraph c = uniform_coloring(make_path(3));
    CnfFormula g = encode_iso(c, c);
    CHECK(g.contains(Clause{{neg(VarKey::iso(1, 1)), neg(VarKey::iso(2, 3))}}));

    // color-incompatible variables are never created; empty Type 1 gives bottom
    ColoredGraph red = a, blue = a;
    red.colors = {"r", "r"};
    blue.colors = {"b", "b"};
    CnfFormula mismatch = encode_iso(red, blue);
    CHECK(mismatch.symbols().size() == 0);
    CHECK(mismatch.contains(Clause{}));
    CHECK_FALSE(satisfiable(mismatch));

    CHECK_THROWS_WITH_AS(encode_iso(a, c), doctest::Contains("SizeMismatch"), Error);

    // sat assignments of F(g1,g2) correspond to isomorphisms (tiny check)
    auto [x, xt] = cfi_pair(make_path(2), make_edge(1, 2));
    CHECK_FALSE(satisfiable(encode_iso(x.graph, xt.graph)));
    CHECK(satisfiable(encode_iso(x.graph, x.graph)));
}

TEST_CASE("multipede and its matrix") {
    // W - V - W path: one gadget of degree 2
    BipartiteGraph g;
    g.nv = 1;
    g.nw = 2;
    g.add_edge(1, 1);
    g.add_edge(1, 2);
    Multipede mp = multipede(g);
    CHECK(mp.graph.g.n == 6); // 4 feet + 2 middles
    FpMatrix m = mp_matrix(g);
    CHECK(m.rows() == 1);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);

    // kernel <-> automorphisms: dim ker = 1 here, so 2 automorphisms
    auto auts = automorphisms_bruteforce(mp.graph);
    auto sol = solve(m, FpVector(2, 1));
    REQUIRE(sol);
    CHECK(auts.size() == (std::size_t{1} << sol->kernel.size()));
}

TEST_CASE("multipede kernel correspondence, injective case") {
    BipartiteGraph g; // rows (1,0), (0,1), (1,1): trivial kernel
    g.nv = 3;
    g.nw = 2;
    g.add_edge(1, 1);
    g.add_edge(2, 2);
    g.add_edge(3, 1);
    g.add_edge(3, 2);
    Multipede mp = multipede(g);
    CHECK(automorphisms_bruteforce(mp.graph).size() == 1);
    auto sol = solve(mp_matrix(g), FpVector(2, 3));
    REQUIRE(sol);
    CHECK(sol->kernel.empty());
}
