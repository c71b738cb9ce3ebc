#include "symres/cfi_prove.hpp"

#include "symres/errors.hpp"

#include <algorithm>
#include <map>

namespace symres {

namespace {

std::vector<EdgeSet> even_edge_subsets(const Graph& g, int v) {
    auto inc = g.incident(v);
    std::vector<EdgeSet> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << inc.size()); ++mask) {
        if (__builtin_popcountll(mask) % 2 != 0) continue;
        EdgeSet s;
        for (std::size_t i = 0; i < inc.size(); ++i)
            if (mask & (std::size_t{1} << i)) s.insert(inc[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// x_{alpha,beta} with alpha from X and beta from X̃ (shared id space).
VarKey xv(int alpha, int beta) { return VarKey::iso(alpha, beta); }

struct Prover {
    const CfiPairEncoding& enc;
    DerivationBuilder& b;

    VarKey z(int v, const EdgeSet& s, const EdgeSet& t) const {
        return xv(enc.x.mid(v, s), enc.x.mid(v, t));
    }
    VarKey ya(int v, const Edge& e, bool to_b) const { // y_{a^v_e, ·}
        return xv(enc.x.a(v, e), to_b ? enc.x.b(v, e) : enc.x.a(v, e));
    }
    VarKey yb(int v, const Edge& e, bool to_b) const { // y_{b^v_e, ·}
        return xv(enc.x.b(v, e), to_b ? enc.x.b(v, e) : enc.x.a(v, e));
    }

    int axiom(const Clause& c) const {
        if (!enc.formula.contains(c))
            fail("InvariantViolation", "required axiom missing from the encoding");
        return b.axiom(c);
    }
    int feet_t1_a(int v, const Edge& e) const {
        return axiom(Clause{{pos(ya(v, e, false)), pos(ya(v, e, true))}});
    }
    int feet_t1_b(int v, const Edge& e) const {
        return axiom(Clause{{pos(yb(v, e, false)), pos(yb(v, e, true))}});
    }

    Clause middle_t1_clause(const Graph& g, int v, const EdgeSet& s) const {
        std::vector<Literal> lits;
        for (const auto& t : even_edge_subsets(g, v)) lits.push_back(pos(z(v, s, t)));
        return Clause{std::move(lits)};
    }
    int middle_t1(const Graph& g, int v, const EdgeSet& s,
                  const std::map<Clause, int>& provided) const {
        Clause c = middle_t1_clause(g, v, s);
        auto it = provided.find(c);
        return it != provided.end() ? it->second : axiom(c);
    }

    int refute(const Graph& g, const std::map<Clause, int>& provided) const;
    int base_case(const Graph& g, const std::map<Clause, int>& provided) const;
    int tree_case(const Graph& g, const std::map<Clause, int>& provided) const;
    int cycle_case(const Graph& g, const std::vector<int>& cycle,
                   const std::map<Clause, int>& provided) const;
};

int Prover::base_case(const Graph& g, const std::map<Clause, int>& provided) const {
    Edge e = *g.edges.begin();
    if (!enc.xt.twist || e != *enc.xt.twist)
        fail("InvariantViolation", "recursion bottomed out away from the twist");
    int u = e.first, v = e.second;
    EdgeSet none;
    VarKey zu = z(u, none, none), zv = z(v, none, none);
    int id = middle_t1(g, u, none, provided);
    id = b.resolve_or_pass(id, axiom(Clause{{neg(zu), neg(yb(u, e, false))}}), zu);
    id = b.resolve_or_pass(feet_t1_b(u, e), id, yb(u, e, false));
    id = b.resolve_or_pass(id, axiom(Clause{{neg(yb(u, e, true)), neg(ya(v, e, false))}}),
                           yb(u, e, true));
    id = b.resolve_or_pass(feet_t1_a(v, e), id, ya(v, e, false));
    id = b.resolve_or_pass(id, axiom(Clause{{neg(zv), neg(ya(v, e, true))}}), ya(v, e, true));
    return b.resolve_or_pass(middle_t1(g, v, none, provided), id, zv);
}

int Prover::tree_case(const Graph& g, const std::map<Clause, int>& provided) const {
    int u = 0;
    for (int cand = 1; cand <= g.n && !u; ++cand)
        if (g.degree(cand) == 1 && (!enc.xt.twist || g.incident(cand)[0] != *enc.xt.twist))
            u = cand;
    if (!u) fail("InvariantViolation", "tree without an untwisted leaf edge");
    Edge e = g.incident(u)[0];
    int v = e.first == u ? e.second : e.first;

    EdgeSet none;
    VarKey zu = z(u, none, none);
    int id = middle_t1(g, u, none, provided);
    id = b.resolve_or_pass(id, axiom(Clause{{neg(zu), neg(ya(u, e, true))}}), zu);
    id = b.resolve_or_pass(feet_t1_a(u, e), id, ya(u, e, true));
    id = b.resolve_or_pass(id, axiom(Clause{{neg(ya(u, e, false)), neg(ya(v, e, true))}}),
                           ya(u, e, false));
    int pos_av = b.resolve_or_pass(feet_t1_a(v, e), id, ya(v, e, true)); // y_{a^v_e,a^v_e}

    Graph next = g;
    next.edges.erase(e);
    auto sv = even_edge_subsets(g, v);
    std::map<Clause, int> next_provided = provided;
    std::map<std::pair<EdgeSet, EdgeSet>, int> units;
    for (const auto& s : sv)
        for (const auto& t : sv) {
            if (s.count(e) || !t.count(e)) continue;
            VarKey zst = z(v, s, t);
            units[{s, t}] = b.resolve_or_pass(
                pos_av, axiom(Clause{{neg(zst), neg(ya(v, e, false))}}), ya(v, e, false));
        }
    for (const auto& s : sv) {
        if (s.count(e)) continue;
        int cur = middle_t1(g, v, s, provided);
        for (const auto& t : sv)
            if (t.count(e)) cur = b.resolve_or_pass(cur, units.at({s, t}), z(v, s, t));
        next_provided.insert_or_assign(middle_t1_clause(next, v, s), cur);
    }
    return refute(next, next_provided);
}

int Prover::cycle_case(const Graph& g, const std::vector<int>& cycle,
                       const std::map<Clause, int>& provided) const {
    std::vector<Edge> cedges;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        cedges.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::sort(cedges.begin(), cedges.end());
    Edge e{0, 0};
    for (const auto& cand : cedges)
        if (!enc.xt.twist || cand != *enc.xt.twist) { e = cand; break; }
    if (e.first == 0) fail("InvariantViolation", "cycle with no untwisted edge");
    int u = e.first, v = e.second;

    // {~y_{a^u,a^u}, y_{a^v,a^v}}
    int mixed = b.resolve_or_pass(
        axiom(Clause{{neg(ya(u, e, false)), neg(ya(v, e, true))}}), feet_t1_a(v, e),
        ya(v, e, true));

    Graph next = g;
    next.edges.erase(e);
    std::map<Clause, int> next_provided = provided;
    for (int mu : {u, v}) {
        auto smu = even_edge_subsets(g, mu);
        std::map<std::pair<EdgeSet, EdgeSet>, int> tagged;
        for (const auto& s : smu)
            for (const auto& t : smu) {
                if (s.count(e) || !t.count(e)) continue;
                int t3 = axiom(Clause{{neg(z(mu, s, t)), neg(ya(mu, e, false))}});
                // for mu = v, trade ~y_{a^v,a^v} for ~y_{a^u,a^u}
                tagged[{s, t}] = mu == u ? t3 : b.resolve_or_pass(mixed, t3, ya(v, e, false));
            }
        for (const auto& s : smu) {
            if (s.count(e)) continue;
            int cur = middle_t1(g, mu, s, provided);
            for (const auto& t : smu)
                if (t.count(e)) cur = b.resolve_or_pass(cur, tagged.at({s, t}), z(mu, s, t));
            next_provided.insert_or_assign(middle_t1_clause(next, mu, s), cur);
        }
    }

    int neg_au = refute(next, next_provided); // clause subset of {~y_{a^u,a^u}}
    if (b.clause(neg_au).empty()) return neg_au;

    Renaming sigma = cycle_automorphism(enc, cycle);
    int neg_bu = b.symmetry(neg_au, sigma, SymScope::Global); // {~y_{b^u,a^u}}
    int id = b.resolve_or_pass(feet_t1_a(u, e),
                               axiom(Clause{{neg(ya(u, e, true)), neg(yb(u, e, true))}}),
                               ya(u, e, true));
    id = b.resolve_or_pass(id, feet_t1_b(u, e), yb(u, e, true));
    id = b.resolve_or_pass(id, neg_au, ya(u, e, false));
    return b.resolve_or_pass(id, neg_bu, yb(u, e, false));
}

int Prover::refute(const Graph& g, const std::map<Clause, int>& provided) const {
    if (g.edges.size() == 1) return base_case(g, provided);
    auto cycle = find_cycle(g);
    if (cycle.empty()) return tree_case(g, provided);
    return cycle_case(g, cycle, provided);
}

} // namespace

CfiPairEncoding encode_cfi_pair(const Graph& base, const Edge& twist) {
    CfiPairEncoding enc{cfi_instance(base, std::nullopt), cfi_instance(base, twist), {}};
    enc.formula = encode_iso(enc.x.graph, enc.xt.graph);
    return enc;
}

Renaming cycle_automorphism(const CfiPairEncoding& enc, const std::vector<int>& cycle) {
    const Graph& base = enc.x.base;
    if (cycle.size() < 3) fail("NotACycle", "need at least 3 vertices");
    std::map<int, EdgeSet> swaps;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int prev = cycle[(i + cycle.size() - 1) % cycle.size()];
        int next = cycle[(i + 1) % cycle.size()];
        int vtx = cycle[i];
        if (swaps.count(vtx)) fail("NotACycle", "repeated vertex");
        if (!base.has_edge(prev, vtx) || !base.has_edge(vtx, next))
            fail("NotACycle", "consecutive vertices not adjacent");
        swaps[vtx] = {make_edge(prev, vtx), make_edge(vtx, next)};
    }
    std::vector<std::pair<Literal, Literal>> pairs;
    for (const auto& [vtx, swap] : swaps) {
        for (const Edge& f : swap) {
            int a = enc.x.a(vtx, f), bb = enc.x.b(vtx, f);
            for (int beta : {enc.x.a(vtx, f), enc.x.b(vtx, f)}) {
                pairs.push_back({pos(xv(a, beta)), pos(xv(bb, beta))});
                pairs.push_back({pos(xv(bb, beta)), pos(xv(a, beta))});
            }
        }
        for (const auto& [key, mid_from] : enc.x.mid_id) {
            if (key.first != vtx) continue;
            EdgeSet image;
            std::set_symmetric_difference(key.second.begin(), key.second.end(), swap.begin(),
                                          swap.end(), std::inserter(image, image.begin()));
            int mid_to = enc.x.mid(vtx, image);
            if (mid_to == mid_from) continue;
            for (const auto& [key2, beta] : enc.x.mid_id) {
                if (key2.first != vtx) continue;
                pairs.push_back({pos(xv(mid_from, beta)), pos(xv(mid_to, beta))});
            }
        }
    }
    Renaming sigma = Renaming::make(pairs);
    if (!sigma.stabilizes(enc.formula.clauses()))
        fail("InvariantViolation", "cycle renaming does not stabilize the formula");
    return sigma;
}

Derivation refute_cfi(const Graph& base, const Edge& twist) {
    if (base.edges.empty()) fail("NoEdge", "base graph has no edges");
    if (!base.edges.count(twist)) fail("NoEdge", "twist edge not in the base graph");
    CfiPairEncoding enc = encode_cfi_pair(base, twist);

    // restrict the recursion to the component containing the twist
    Graph g0;
    g0.n = base.n;
    for (const auto& comp : connected_components(base))
        if (std::find(comp.begin(), comp.end(), twist.first) != comp.end())
            for (const auto& e : base.edges)
                if (std::find(comp.begin(), comp.end(), e.first) != comp.end())
                    g0.edges.insert(e);
    if (g0.edges.empty()) fail("Disconnected", "no component contains the twist");

    DerivationBuilder b;
    Prover prover{enc, b};
    int id = prover.refute(g0, {});
    if (!b.clause(id).empty()) fail("InvariantViolation", "refutation did not reach bottom");
    return b.take();
}

long long cfi_budget(const Graph& base, const Edge& twist) {
    Graph g0;
    g0.n = base.n;
    for (const auto& comp : connected_components(base))
        if (std::find(comp.begin(), comp.end(), twist.first) != comp.end())
            for (const auto& e : base.edges)
                if (std::find(comp.begin(), comp.end(), e.first) != comp.end())
                    g0.edges.insert(e);
    long long phi = 0;
    for (int v = 1; v <= g0.n; ++v)
        if (g0.degree(v) > 0) phi += 1LL << (2 * g0.degree(v));
    return 6 * (static_cast<long long>(g0.edges.size()) + phi);
}

} // namespace symres
