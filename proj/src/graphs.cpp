#include "symres/graphs.hpp"

#include "symres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symres {

Edge make_edge(int u, int v) {
    if (u == v) fail("BadEdge", "self-loop at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n || v < 1 || v > n)
        fail("BadEdge", "edge endpoint out of range");
    edges.insert(make_edge(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> Graph::incident(int v) const {
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) out.push_back(e);
    return out;
}

Graph make_path(int n) {
    Graph g;
    g.n = n;
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) fail("BadEdge", "cycle needs at least 3 vertices");
    Graph g = make_path(n);
    g.add_edge(n, 1);
    return g;
}

Graph make_complete(int n) {
    Graph g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)]) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (!comp[static_cast<std::size_t>(w)]) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

namespace {

bool cycle_dfs(const Graph& g, int v, int parent, std::vector<int>& state,
               std::vector<int>& path, std::vector<int>& cycle) {
    state[static_cast<std::size_t>(v)] = 1;
    path.push_back(v);
    for (int w : g.neighbors(v)) {
        if (w == parent) {
            parent = 0; // consume one parent edge; a second one is a multi-edge (none here)
            continue;
        }
        if (state[static_cast<std::size_t>(w)] == 1) {
            auto it = std::find(path.begin(), path.end(), w);
            cycle.assign(it, path.end());
            return true;
        }
        if (state[static_cast<std::size_t>(w)] == 0 && cycle_dfs(g, w, v, state, path, cycle))
            return true;
    }
    state[static_cast<std::size_t>(v)] = 2;
    path.pop_back();
    return false;
}

} // namespace

std::vector<int> find_cycle(const Graph& g) {
    std::vector<int> state(static_cast<std::size_t>(g.n) + 1, 0), path, cycle;
    for (int s = 1; s <= g.n; ++s)
        if (state[static_cast<std::size_t>(s)] == 0 && cycle_dfs(g, s, 0, state, path, cycle))
            return cycle;
    return {};
}

ColoredGraph uniform_coloring(const Graph& g, const std::string& token) {
    ColoredGraph cg;
    cg.g = g;
    cg.colors.assign(static_cast<std::size_t>(g.n), token);
    return cg;
}

ColoredGraph individualize(const ColoredGraph& g, int v) {
    if (v < 1 || v > g.g.n) fail("BadVertex", "individualize: vertex out of range");
    ColoredGraph out = g;
    for (int u = 1; u <= g.g.n; ++u)
        out.colors[static_cast<std::size_t>(u) - 1] =
            g.color(u) + (u == v ? ",1" : ",0");
    return out;
}

void BipartiteGraph::add_edge(int v, int w) {
    if (v < 1 || v > nv || w < 1 || w > nw)
        fail("BadEdge", "bipartite edge endpoint out of range");
    edges.insert({v, w});
}

std::vector<int> BipartiteGraph::neighborhood(int v) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.first == v) out.push_back(e.second);
    return out;
}

std::vector<int> BipartiteGraph::w_neighborhood(int w) const {
    std::vector<int> out;
    for (const auto& e : edges)
        if (e.second == w) out.push_back(e.first);
    return out;
}

bool BipartiteGraph::connected() const {
    if (nv + nw <= 1) return true;
    // reuse Graph traversal: v-side ids 1..nv, w-side ids nv+1..nv+nw
    Graph g;
    g.n = nv + nw;
    for (const auto& e : edges) g.add_edge(e.first, nv + e.second);
    return connected_components(g).size() == 1;
}

ColoredGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "graph") fail("ParseError", "expected 'graph <n>' header");
    int n = 0;
    if (!(in >> n) || n < 0) fail("ParseError", "bad vertex count");
    ColoredGraph cg = uniform_coloring(Graph{}, "*");
    cg.g.n = n;
    cg.colors.assign(static_cast<std::size_t>(n), "*");
    while (in >> tok) {
        if (tok == "e") {
            int u, v;
            if (!(in >> u >> v)) fail("ParseError", "bad edge line");
            cg.g.add_edge(u, v);
        } else if (tok == "c") {
            int v;
            std::string color;
            if (!(in >> v >> color)) fail("ParseError", "bad color line");
            if (v < 1 || v > n) fail("ParseError", "color vertex out of range");
            cg.colors[static_cast<std::size_t>(v) - 1] = color;
        } else {
            fail("ParseError", "unknown graph line '" + tok + "'");
        }
    }
    return cg;
}

std::string emit_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "graph " << g.g.n << "\n";
    for (const auto& e : g.g.edges) out << "e " << e.first << " " << e.second << "\n";
    for (int v = 1; v <= g.g.n; ++v)
        if (g.color(v) != "*") out << "c " << v << " " << g.color(v) << "\n";
    return out.str();
}

// Bipartite files reuse the graph format with `part v|w <id>` side labels;
// edges use the global ids, sides are re-indexed 1..nv / 1..nw in label order.
BipartiteGraph parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok) || tok != "graph") fail("ParseError", "expected 'graph <n>' header");
    int n = 0;
    if (!(in >> n) || n < 0) fail("ParseError", "bad vertex count");
    std::vector<char> side(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Edge> edges;
    while (in >> tok) {
        if (tok == "part") {
            std::string s;
            int id;
            if (!(in >> s >> id) || (s != "v" && s != "w") || id < 1 || id > n)
                fail("ParseError", "bad part line");
            side[static_cast<std::size_t>(id)] = s[0];
        } else if (tok == "e") {
            int u, v;
            if (!(in >> u >> v)) fail("ParseError", "bad edge line");
            if (u < 1 || u > n || v < 1 || v > n) fail("ParseError", "edge endpoint out of range");
            edges.push_back(make_edge(u, v));
        } else {
            fail("ParseError", "unknown bipartite line '" + tok + "'");
        }
    }
    std::vector<int> index(static_cast<std::size_t>(n) + 1, 0);
    BipartiteGraph g;
    for (int id = 1; id <= n; ++id) {
        if (side[static_cast<std::size_t>(id)] == 'v') index[static_cast<std::size_t>(id)] = ++g.nv;
        else if (side[static_cast<std::size_t>(id)] == 'w') index[static_cast<std::size_t>(id)] = ++g.nw;
        else fail("NotBipartite", "vertex " + std::to_string(id) + " has no part label");
    }
    for (const auto& e : edges) {
        int a = e.first, b = e.second;
        if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)])
            fail("NotBipartite", "edge inside one part");
        if (side[static_cast<std::size_t>(a)] == 'w') std::swap(a, b);
        g.add_edge(index[static_cast<std::size_t>(a)], index[static_cast<std::size_t>(b)]);
    }
    return g;
}

std::string emit_bipartite(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "graph " << g.nv + g.nw << "\n";
    for (int v = 1; v <= g.nv; ++v) out << "part v " << v << "\n";
    for (int w = 1; w <= g.nw; ++w) out << "part w " << g.nv + w << "\n";
    for (const auto& e : g.edges) out << "e " << e.first << " " << g.nv + e.second << "\n";
    return out.str();
}

} // namespace symres
