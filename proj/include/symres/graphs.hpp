#ifndef SYMRES_GRAPHS_HPP
#define SYMRES_GRAPHS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symres {

using Edge = std::pair<int, int>; // normalized u < v

Edge make_edge(int u, int v);

// Simple undirected graph, vertices 1..n, no self-loops.
struct Graph {
    int n = 0;
    std::set<Edge> edges;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return edges.count(make_edge(u, v)) > 0; }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> incident(int v) const;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Vertices of some simple cycle in DFS-first order, empty if g is a forest.
std::vector<int> find_cycle(const Graph& g);

struct ColoredGraph {
    Graph g;
    std::vector<std::string> colors; // size n, opaque tokens
    std::vector<std::string> names;  // display names, optional (empty = numeric)

    const std::string& color(int v) const { return colors[static_cast<std::size_t>(v) - 1]; }
};

ColoredGraph uniform_coloring(const Graph& g, const std::string& token = "*");

// Refines the coloring so v is the unique vertex tagged 1.
ColoredGraph individualize(const ColoredGraph& g, int v);

struct BipartiteGraph {
    int nv = 0, nw = 0;
    std::set<std::pair<int, int>> edges; // (v-side id, w-side id), both 1-based

    void add_edge(int v, int w);
    std::vector<int> neighborhood(int v) const; // w-side neighbors of v
    std::vector<int> w_neighborhood(int w) const;
    int v_degree(int v) const { return static_cast<int>(neighborhood(v).size()); }
    bool connected() const;
};

// Text formats:
//   graph <n>      followed by `e u v` and `c v <token>` lines
//   bipartite <nv> <nw>  followed by `e v w` lines
ColoredGraph parse_graph(const std::string& text);
std::string emit_graph(const ColoredGraph& g);
BipartiteGraph parse_bipartite(const std::string& text);
std::string emit_bipartite(const BipartiteGraph& g);

} // namespace symres

#endif
