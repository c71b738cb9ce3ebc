#include "symres/cfi.hpp"

#include "symres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symres {

namespace {

constexpr int kDegreeCap = 12;

std::vector<std::set<int>> even_subsets(const std::vector<int>& items) {
    std::vector<std::set<int>> out;
    std::size_t n = items.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) % 2 != 0) continue;
        std::set<int> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.insert(items[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string edge_token(const Edge& e) {
    return std::to_string(e.first) + "_" + std::to_string(e.second);
}

bool is_automorphism(const ColoredGraph& g, const std::vector<int>& perm) {
    for (int v = 1; v <= g.g.n; ++v)
        if (g.color(v) != g.color(perm[static_cast<std::size_t>(v)])) return false;
    for (const auto& e : g.g.edges)
        if (!g.g.has_edge(perm[static_cast<std::size_t>(e.first)],
                          perm[static_cast<std::size_t>(e.second)]))
            return false;
    return true;
}

} // namespace

Gadget cfi_gadget(int n) {
    if (n < 0 || n > kDegreeCap) fail("TooLarge", "gadget degree " + std::to_string(n));
    Gadget g;
    g.n = n;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int w = 1; w <= n; ++w) labels[static_cast<std::size_t>(w) - 1] = w;
    g.middles = even_subsets(labels);
    Graph base;
    base.n = 2 * n + static_cast<int>(g.middles.size());
    g.graph.g = base;
    g.graph.colors.assign(static_cast<std::size_t>(base.n), "m");
    g.graph.names.assign(static_cast<std::size_t>(base.n), "");
    for (int w = 1; w <= n; ++w) {
        g.graph.colors[static_cast<std::size_t>(g.a(w)) - 1] = "c" + std::to_string(w);
        g.graph.colors[static_cast<std::size_t>(g.b(w)) - 1] = "c" + std::to_string(w);
        g.graph.names[static_cast<std::size_t>(g.a(w)) - 1] = "a" + std::to_string(w);
        g.graph.names[static_cast<std::size_t>(g.b(w)) - 1] = "b" + std::to_string(w);
    }
    for (std::size_t i = 0; i < g.middles.size(); ++i) {
        std::string name = "m{";
        for (int w : g.middles[i]) name += std::to_string(w) + ",";
        if (name.back() == ',') name.pop_back();
        g.graph.names[static_cast<std::size_t>(g.mid(i)) - 1] = name + "}";
        for (int w = 1; w <= n; ++w)
            g.graph.g.add_edge(g.mid(i), g.middles[i].count(w) ? g.a(w) : g.b(w));
    }
    return g;
}

std::vector<std::set<int>> gadget_automorphisms(int n) {
    Gadget g = cfi_gadget(n);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int w = 1; w <= n; ++w) labels[static_cast<std::size_t>(w) - 1] = w;
    std::vector<std::set<int>> out;
    for (const auto& swap : even_subsets(labels)) {
        std::vector<int> perm(static_cast<std::size_t>(g.graph.g.n) + 1);
        for (int w = 1; w <= n; ++w) {
            bool sw = swap.count(w) > 0;
            perm[static_cast<std::size_t>(g.a(w))] = sw ? g.b(w) : g.a(w);
            perm[static_cast<std::size_t>(g.b(w))] = sw ? g.a(w) : g.b(w);
        }
        for (std::size_t i = 0; i < g.middles.size(); ++i) {
            std::set<int> image;
            std::set_symmetric_difference(g.middles[i].begin(), g.middles[i].end(),
                                          swap.begin(), swap.end(),
                                          std::inserter(image, image.begin()));
            auto it = std::find(g.middles.begin(), g.middles.end(), image);
            perm[static_cast<std::size_t>(g.mid(i))] =
                g.mid(static_cast<std::size_t>(it - g.middles.begin()));
        }
        if (!is_automorphism(g.graph, perm))
            fail("InvariantViolation", "swap-set failed the automorphism check");
        out.push_back(swap);
    }
    return out;
}

int CfiGraph::a(int v, const Edge& e) const {
    auto it = a_id.find({v, e});
    if (it == a_id.end()) fail("BadVertex", "no a-foot for that (vertex, edge)");
    return it->second;
}

int CfiGraph::b(int v, const Edge& e) const {
    auto it = b_id.find({v, e});
    if (it == b_id.end()) fail("BadVertex", "no b-foot for that (vertex, edge)");
    return it->second;
}

int CfiGraph::mid(int v, const EdgeSet& s) const {
    auto it = mid_id.find({v, s});
    if (it == mid_id.end()) fail("BadVertex", "no middle vertex for that subset");
    return it->second;
}

CfiGraph cfi_instance(const Graph& base, std::optional<Edge> twist) {
    if (base.edges.empty()) fail("NoEdge", "base graph has no edges");
    if (twist && !base.edges.count(*twist)) fail("NoEdge", "twist edge not in the base graph");
    CfiGraph x;
    x.base = base;
    x.twist = twist;
    int next = 0;
    std::vector<std::string> colors, names;
    auto add_vertex = [&](const std::string& color, const std::string& name) {
        colors.push_back(color);
        names.push_back(name);
        return ++next;
    };
    for (int v = 1; v <= base.n; ++v) {
        auto inc = base.incident(v);
        if (static_cast<int>(inc.size()) > kDegreeCap)
            fail("TooLarge", "base degree " + std::to_string(inc.size()));
        for (const auto& e : inc) {
            std::string tag = std::to_string(v) + "_" + edge_token(e);
            x.a_id[{v, e}] = add_vertex("p" + tag, "a^" + tag);
            x.b_id[{v, e}] = add_vertex("p" + tag, "b^" + tag);
        }
        std::vector<int> labels(inc.size());
        for (std::size_t i = 0; i < inc.size(); ++i) labels[i] = static_cast<int>(i);
        for (const auto& subset : even_subsets(labels)) {
            EdgeSet s;
            for (int i : subset) s.insert(inc[static_cast<std::size_t>(i)]);
            std::string name = "m^" + std::to_string(v) + "{";
            for (const auto& e : s) name += edge_token(e) + ",";
            if (name.back() == ',') name.pop_back();
            x.mid_id[{v, s}] = add_vertex("m" + std::to_string(v), name + "}");
        }
    }
    Graph g;
    g.n = next;
    for (const auto& [key, id] : x.mid_id) {
        const auto& [v, s] = key;
        for (const auto& e : x.base.incident(v))
            g.add_edge(id, s.count(e) ? x.a_id.at({v, e}) : x.b_id.at({v, e}));
    }
    for (const auto& e : base.edges) {
        int u = e.first, v = e.second;
        if (twist && e == *twist) {
            g.add_edge(x.a_id.at({u, e}), x.b_id.at({v, e}));
            g.add_edge(x.b_id.at({u, e}), x.a_id.at({v, e}));
        } else {
            g.add_edge(x.a_id.at({u, e}), x.a_id.at({v, e}));
            g.add_edge(x.b_id.at({u, e}), x.b_id.at({v, e}));
        }
    }
    x.graph.g = g;
    x.graph.colors = std::move(colors);
    x.graph.names = std::move(names);
    return x;
}

std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& base, const Edge& twist) {
    return {cfi_instance(base, std::nullopt), cfi_instance(base, twist)};
}

Multipede multipede(const BipartiteGraph& g) {
    Multipede mp;
    mp.base = g;
    int next = 0;
    std::vector<std::string> colors, names;
    auto add_vertex = [&](const std::string& color, const std::string& name) {
        colors.push_back(color);
        names.push_back(name);
        return ++next;
    };
    for (int w = 1; w <= g.nw; ++w) {
        mp.a_id[w] = add_vertex("c" + std::to_string(w), "a" + std::to_string(w));
        mp.b_id[w] = add_vertex("c" + std::to_string(w), "b" + std::to_string(w));
    }
    for (int v = 1; v <= g.nv; ++v) {
        auto nb = g.neighborhood(v);
        if (static_cast<int>(nb.size()) > kDegreeCap)
            fail("TooLarge", "gadget degree " + std::to_string(nb.size()));
        for (const auto& s : even_subsets(nb)) {
            std::string name = "m^" + std::to_string(v) + "{";
            for (int w : s) name += std::to_string(w) + ",";
            if (name.back() == ',') name.pop_back();
            mp.mid_id[{v, s}] = add_vertex("m" + std::to_string(v), name + "}");
        }
    }
    Graph graph;
    graph.n = next;
    for (const auto& [key, id] : mp.mid_id) {
        const auto& [v, s] = key;
        for (int w : g.neighborhood(v))
            graph.add_edge(id, s.count(w) ? mp.a(w) : mp.b(w));
    }
    mp.graph.g = graph;
    mp.graph.colors = std::move(colors);
    mp.graph.names = std::move(names);
    return mp;
}

FpMatrix mp_matrix(const BipartiteGraph& g) {
    FpMatrix m(2, g.nv, g.nw);
    for (const auto& e : g.edges) m.at(e.first - 1, e.second - 1) = 1;
    return m;
}

CnfFormula encode_iso(const ColoredGraph& g1, const ColoredGraph& g2) {
    if (g1.g.n != g2.g.n) fail("SizeMismatch", "vertex counts differ");
    int n = g1.g.n;
    auto compatible = [&](int u, int v) { return g1.color(u) == g2.color(v); };
    std::set<Clause> clauses;
    for (int u = 1; u <= n; ++u) { // Type 1
        std::vector<Literal> lits;
        for (int v = 1; v <= n; ++v)
            if (compatible(u, v)) lits.push_back(pos(VarKey::iso(u, v)));
        clauses.insert(Clause{std::move(lits)});
    }
    for (int v = 1; v <= n; ++v) // Type 2
        for (int u1 = 1; u1 <= n; ++u1)
            for (int u2 = u1 + 1; u2 <= n; ++u2)
                if (compatible(u1, v) && compatible(u2, v))
                    clauses.insert(Clause{{neg(VarKey::iso(u1, v)), neg(VarKey::iso(u2, v))}});
    for (int u1 = 1; u1 <= n; ++u1) // Type 3
        for (int v1 = u1 + 1; v1 <= n; ++v1)
            for (int u2 = 1; u2 <= n; ++u2)
                for (int v2 = 1; v2 <= n; ++v2) {
                    if (u2 == v2 || !compatible(u1, u2) || !compatible(v1, v2)) continue;
                    if (g1.g.has_edge(u1, v1) != g2.g.has_edge(u2, v2))
                        clauses.insert(Clause{{neg(VarKey::iso(u1, u2)), neg(VarKey::iso(v1, v2))}});
                }
    // from_clauses would drop variables that appear in no clause; keep them all.
    std::set<VarKey> keys;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (compatible(u, v)) keys.insert(VarKey::iso(u, v));
    return CnfFormula(std::move(clauses), SymbolTable::from_keys(keys));
}

} // namespace symres
