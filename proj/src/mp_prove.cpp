#include "symres/mp_prove.hpp"

#include "symres/errors.hpp"
#include "symres/lineq_prove.hpp"

#include <algorithm>

namespace symres {

namespace {

VarKey y(const Multipede& mp, int from_w, bool from_b, int to_w, bool to_b) {
    return VarKey::iso(from_b ? mp.b(from_w) : mp.a(from_w),
                       to_b ? mp.b(to_w) : mp.a(to_w));
}

std::vector<std::set<int>> even_subsets_of(const std::vector<int>& items) {
    std::vector<std::set<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
        if (__builtin_popcountll(mask) % 2 != 0) continue;
        std::set<int> s;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (std::size_t{1} << i)) s.insert(items[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int checked_axiom(DerivationBuilder& b, const CnfFormula& f, const Clause& c) {
    if (!f.contains(c)) fail("InvariantViolation", "expected clause missing from the encoding");
    return b.axiom(c);
}

// Chains the Type-1 clause of m^v_{} against one Type-3 clause per even S,
// producing \/_{w in B} ~y_{a_w,b_w} \/ \/_{w in N\B} ~y_{a_w,a_w}.
int bridge_clause(DerivationBuilder& b, const Multipede& mp, const CnfFormula& f, int v,
                  const std::set<int>& big_b) {
    auto n = mp.base.neighborhood(v);
    if (big_b.size() % 2 != 1) fail("InvariantViolation", "bridge set must be odd");
    auto evens = even_subsets_of(n);
    std::vector<Literal> t1;
    for (const auto& s : evens)
        t1.push_back(pos(VarKey::iso(mp.mid(v, {}), mp.mid(v, s))));
    int cur = checked_axiom(b, f, Clause{std::move(t1)});
    for (const auto& s : evens) {
        std::set<int> diff;
        std::set_symmetric_difference(s.begin(), s.end(), big_b.begin(), big_b.end(),
                                      std::inserter(diff, diff.begin()));
        int gamma = *diff.begin(); // |S| even, |B| odd, so S^B is nonempty
        VarKey zvar = VarKey::iso(mp.mid(v, {}), mp.mid(v, s));
        Literal lit = neg(y(mp, gamma, false, gamma, big_b.count(gamma) > 0));
        cur = b.resolve_or_pass(cur, checked_axiom(b, f, Clause{{neg(zvar), lit}}), zvar);
    }
    return cur;
}

// psi_d without the kernel precondition: gadgets with odd |D n N(v)| keep
// their middle variables fixed (their clauses never sit in the ancestry of
// a step that uses this renaming).
Renaming foot_symmetry(const Multipede& mp, const std::vector<unsigned>& d) {
    if (static_cast<int>(d.size()) != mp.base.nw) fail("SizeMismatch", "kernel vector length");
    std::set<int> dset;
    for (int w = 1; w <= mp.base.nw; ++w)
        if (d[static_cast<std::size_t>(w) - 1] % 2 != 0) dset.insert(w);
    std::vector<std::pair<Literal, Literal>> pairs;
    for (int w : dset) // feet colors keep the y-variable space diagonal in w
        for (bool from_b : {false, true}) {
            pairs.push_back({pos(y(mp, w, from_b, w, false)), pos(y(mp, w, from_b, w, true))});
            pairs.push_back({pos(y(mp, w, from_b, w, true)), pos(y(mp, w, from_b, w, false))});
        }
    for (int v = 1; v <= mp.base.nv; ++v) {
        auto n = mp.base.neighborhood(v);
        std::set<int> dv;
        for (int w : n)
            if (dset.count(w)) dv.insert(w);
        if (dv.empty() || dv.size() % 2 != 0) continue;
        auto evens = even_subsets_of(n);
        for (const auto& s : evens)
            for (const auto& t : evens) {
                std::set<int> image;
                std::set_symmetric_difference(t.begin(), t.end(), dv.begin(), dv.end(),
                                              std::inserter(image, image.begin()));
                pairs.push_back({pos(VarKey::iso(mp.mid(v, s), mp.mid(v, t))),
                                 pos(VarKey::iso(mp.mid(v, s), mp.mid(v, image)))});
            }
    }
    return Renaming::make(pairs);
}

} // namespace

Renaming bridge_renaming(const Multipede& mp) {
    std::vector<std::pair<Literal, Literal>> pairs;
    for (int w = 1; w <= mp.base.nw; ++w) {
        pairs.push_back({pos(VarKey::xi(w, 0)), pos(y(mp, w, false, w, false))});
        pairs.push_back({pos(VarKey::xi(w, 1)), pos(y(mp, w, false, w, true))});
    }
    return Renaming::make(pairs);
}

CnfFormula mp_f1(const Multipede& mp) { return encode_iso(mp.graph, mp.graph); }

CnfFormula mp_f0(const Multipede& mp, int foot) {
    if (foot < 1 || foot > mp.base.nw) fail("BadVertex", "foot index out of range");
    return encode_iso(individualize(mp.graph, mp.a(foot)),
                      individualize(mp.graph, mp.b(foot)));
}

Derivation bridge_to_linear(const BipartiteGraph& g) {
    Multipede mp = multipede(g);
    CnfFormula f1 = mp_f1(mp);
    DerivationBuilder b;
    for (int v = 1; v <= g.nv; ++v) {
        auto n = g.neighborhood(v);
        for (std::size_t mask = 0; mask < (std::size_t{1} << n.size()); ++mask) {
            if (__builtin_popcountll(mask) % 2 != 1) continue;
            std::set<int> big_b;
            for (std::size_t i = 0; i < n.size(); ++i)
                if (mask & (std::size_t{1} << i)) big_b.insert(n[i]);
            bridge_clause(b, mp, f1, v, big_b);
        }
    }
    return b.take();
}

Renaming lift_symmetry(const Multipede& mp, const std::vector<unsigned>& d) {
    FpMatrix m = mp_matrix(mp.base);
    FpVector dv(2, std::vector<unsigned>(d.begin(), d.end()));
    if (!m.mul(dv).is_zero()) fail("NotInKernel", "M(G) d != 0");
    return foot_symmetry(mp, d);
}

MpRefutation refute_multipede(const BipartiteGraph& g, int foot) {
    if (!g.connected()) fail("Disconnected", "base graph must be connected");
    if (foot < 1 || foot > g.nw) fail("BadVertex", "foot index out of range");
    FpMatrix m = mp_matrix(g);
    auto hom = solve(m, FpVector(2, static_cast<std::size_t>(g.nv)));
    if (!hom || !hom->kernel.empty())
        fail("HasAutomorphisms", "M(G) has a nontrivial kernel");

    // Individualizing foot k forces y_k = 1: refute the substituted system
    // (column k dropped, rhs = that column) natively over F0.
    std::size_t k = static_cast<std::size_t>(foot) - 1;
    FpMatrix mhat = m;
    std::vector<unsigned> bhat(static_cast<std::size_t>(g.nv), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.nv); ++i) {
        bhat[i] = m.at(i, k);
        mhat.at(i, k) = 0;
    }
    FpVector bvec(2, bhat);
    FpVector cert = inconsistency_certificate(mhat, bvec);
    std::vector<Row> rows;
    std::vector<std::size_t> row_index; // original row per selected row
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.nv); ++i)
        if (cert[i] != 0) {
            rows.push_back({mhat.row(i), bhat[i]});
            row_index.push_back(i);
        }

    DerivationBuilder lin;
    derive_sum_clauses(lin, rows, {Clause{}});
    Derivation dlin = lin.take();

    Multipede mp = multipede(g);
    CnfFormula f0 = mp_f0(mp, foot);
    Renaming r = bridge_renaming(mp);
    VarKey unit_var = y(mp, foot, false, foot, true);
    DerivationBuilder b;

    auto bridge_axiom = [&](const Clause& c) -> int {
        // c = C_{mhat_i}(x) for a selected row; recover (gadget, B-full).
        std::set<int> supp, big_b;
        for (const Literal& l : c) {
            supp.insert(l.var.a);
            if (l.var.b == 1) big_b.insert(l.var.a);
        }
        for (std::size_t idx = 0; idx < rows.size(); ++idx) {
            const auto& [a, rhs] = rows[idx];
            std::set<int> rsupp;
            for (std::size_t j : support(a)) rsupp.insert(static_cast<int>(j));
            if (rsupp != supp || big_b.size() % 2 == rhs % 2) continue;
            std::set<int> full = big_b;
            if (rhs) full.insert(foot);
            int id = bridge_clause(b, mp, f0, static_cast<int>(row_index[idx]) + 1, full);
            if (b.clause(id).contains(neg(unit_var)))
                id = b.resolve_or_pass(checked_axiom(b, f0, Clause{{pos(unit_var)}}), id,
                                       unit_var);
            return id;
        }
        fail("InvariantViolation", "axiom clause matches no selected row");
    };

    std::vector<int> ids(static_cast<std::size_t>(dlin.size()) + 1, 0);
    for (int id = 1; id <= dlin.size(); ++id) {
        const ProofStep& s = dlin.step(id);
        int out = 0;
        switch (s.kind) {
        case StepKind::Axiom:
            if (s.clause.empty()) {
                out = bridge_axiom(s.clause);
            } else if (s.clause.begin()->positive) { // V_j -> foot Type-1 clause
                int j = s.clause.begin()->var.a;
                out = checked_axiom(b, f0,
                                    Clause{{pos(y(mp, j, false, j, false)),
                                            pos(y(mp, j, false, j, true))}});
            } else {
                out = bridge_axiom(s.clause);
            }
            break;
        case StepKind::Resolve:
            out = b.resolve_or_pass(ids[static_cast<std::size_t>(s.left)],
                                    ids[static_cast<std::size_t>(s.right)],
                                    r(pos(s.pivot)).var);
            break;
        case StepKind::Symmetry: {
            std::vector<unsigned> d(static_cast<std::size_t>(g.nw), 0);
            for (const auto& [from, to] : s.sigma.positive_pairs())
                if (from.var.b == 0)
                    d[static_cast<std::size_t>(from.var.a) - 1] =
                        (2 + to.var.b - from.var.b) % 2;
            out = b.symmetry(ids[static_cast<std::size_t>(s.source)], foot_symmetry(mp, d),
                             SymScope::Local);
            break;
        }
        }
        ids[static_cast<std::size_t>(id)] = out;
    }
    Derivation out = b.take();
    if (!out.derives_bottom()) fail("InvariantViolation", "replay did not reach bottom");
    return {std::move(f0), std::move(out)};
}

} // namespace symres
