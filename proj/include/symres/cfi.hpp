#ifndef SYMRES_CFI_HPP
#define SYMRES_CFI_HPP

#include "symres/cnf.hpp"
#include "symres/fp.hpp"
#include "symres/graphs.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace symres {

using EdgeSet = std::set<Edge>;

// One gadget X_N built over abstract neighbour labels 1..|N|.
struct Gadget {
    int n = 0;                       // |N|
    ColoredGraph graph;              // a_1..a_n, b_1..b_n, then middles
    std::vector<std::set<int>> middles; // even subsets, sorted order
    int a(int w) const { return w; }
    int b(int w) const { return n + w; }
    int mid(std::size_t idx) const { return 2 * n + 1 + static_cast<int>(idx); }
};

Gadget cfi_gadget(int n);

// Automorphisms of X_N as even swap-sets S ⊆ {1..n}; each verified on the graph.
std::vector<std::set<int>> gadget_automorphisms(int n);

// X(G) (or X̃(G) when a twist edge is set): gadget per base vertex, pair edges
// between gadgets for every base edge, twist crosses one base edge's pair.
struct CfiGraph {
    Graph base;
    std::optional<Edge> twist;
    ColoredGraph graph;
    std::map<std::pair<int, Edge>, int> a_id, b_id;      // (base vertex, incident edge)
    std::map<std::pair<int, EdgeSet>, int> mid_id;       // (base vertex, even subset)

    int a(int v, const Edge& e) const;
    int b(int v, const Edge& e) const;
    int mid(int v, const EdgeSet& s) const;
};

CfiGraph cfi_instance(const Graph& base, std::optional<Edge> twist);
std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& base, const Edge& twist);

// MP(G): feet a_w,b_w per w ∈ W shared across the gadgets X^v_{N(v)}.
struct Multipede {
    BipartiteGraph base;
    ColoredGraph graph;
    std::map<int, int> a_id, b_id;                  // foot w
    std::map<std::pair<int, std::set<int>>, int> mid_id; // (v, even subset of N(v))

    int a(int w) const { return a_id.at(w); }
    int b(int w) const { return b_id.at(w); }
    int mid(int v, const std::set<int>& s) const { return mid_id.at({v, s}); }
};

Multipede multipede(const BipartiteGraph& g);
FpMatrix mp_matrix(const BipartiteGraph& g);

// F(G1,G2): Type 1/2/3 clauses over color-compatible variables x_{u,v}.
CnfFormula encode_iso(const ColoredGraph& g1, const ColoredGraph& g2);

} // namespace symres

#endif
