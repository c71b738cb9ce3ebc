#include "symres/oracle.hpp"

#include "symres/errors.hpp"

#include <algorithm>

namespace symres {

std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f) {
    int n = f.symbols().size();
    if (n > 24) fail("TooLarge", "sat_bruteforce handles at most 24 variables");
    for (const Clause& c : f.clauses())
        if (c.empty()) return std::nullopt;
    // Pre-index clauses as DIMACS ints for speed.
    std::vector<std::vector<int>> cls;
    for (const Clause& c : f.clauses()) {
        std::vector<int> lits;
        for (const Literal& l : c) {
            int idx = f.symbols().index(l.var);
            lits.push_back(l.positive ? idx : -idx);
        }
        cls.push_back(std::move(lits));
    }
    if (n == 0) return std::vector<bool>{}; // no variables, no empty clause
    std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t m = 0; m != limit; ++m) {
        // bit for variable i: treat variable 1 as the most significant digit
        auto value = [&](int var) { return (m >> (n - var)) & 1u; };
        bool ok = true;
        for (const auto& c : cls) {
            bool sat = false;
            for (int l : c)
                if ((l > 0) == (value(std::abs(l)) != 0)) { sat = true; break; }
            if (!sat) { ok = false; break; }
        }
        if (ok) {
            std::vector<bool> model(static_cast<std::size_t>(n));
            for (int v = 1; v <= n; ++v) model[static_cast<std::size_t>(v) - 1] = value(v) != 0;
            return model;
        }
    }
    return std::nullopt;
}

bool satisfiable(const CnfFormula& f) { return sat_bruteforce(f).has_value(); }

namespace {

void iso_backtrack(const ColoredGraph& g1, const ColoredGraph& g2, int v,
                   std::vector<int>& image, std::vector<bool>& used,
                   std::vector<std::vector<int>>& out) {
    int n = g1.g.n;
    if (v > n) {
        out.push_back(image);
        return;
    }
    for (int w = 1; w <= n; ++w) {
        if (used[static_cast<std::size_t>(w)] || g1.color(v) != g2.color(w)) continue;
        bool ok = true;
        for (int u = 1; u < v && ok; ++u)
            if (g1.g.has_edge(u, v) != g2.g.has_edge(image[static_cast<std::size_t>(u) - 1], w))
                ok = false;
        if (!ok) continue;
        image[static_cast<std::size_t>(v) - 1] = w;
        used[static_cast<std::size_t>(w)] = true;
        iso_backtrack(g1, g2, v + 1, image, used, out);
        used[static_cast<std::size_t>(w)] = false;
    }
}

} // namespace

std::vector<std::vector<int>> iso_bruteforce(const ColoredGraph& g1, const ColoredGraph& g2) {
    if (g1.g.n != g2.g.n) return {};
    if (g1.g.n > 10) fail("TooLarge", "iso_bruteforce handles at most 10 vertices");
    std::vector<std::vector<int>> out;
    std::vector<int> image(static_cast<std::size_t>(g1.g.n));
    std::vector<bool> used(static_cast<std::size_t>(g1.g.n) + 1, false);
    iso_backtrack(g1, g2, 1, image, used, out);
    return out;
}

std::vector<std::vector<int>> automorphisms_bruteforce(const ColoredGraph& g) {
    if (g.g.n > 12) fail("TooLarge", "automorphisms_bruteforce handles at most 12 vertices");
    std::vector<std::vector<int>> out;
    std::vector<int> image(static_cast<std::size_t>(g.g.n));
    std::vector<bool> used(static_cast<std::size_t>(g.g.n) + 1, false);
    iso_backtrack(g, g, 1, image, used, out);
    return out;
}

namespace {

int emit_expanded(DerivationBuilder& b, const Derivation& trace, int id, const Renaming& sigma) {
    const ProofStep& s = trace.step(id);
    switch (s.kind) {
    case StepKind::Axiom:
        return b.axiom(sigma(s.clause));
    case StepKind::Resolve: {
        int l = emit_expanded(b, trace, s.left, sigma);
        int r = emit_expanded(b, trace, s.right, sigma);
        return b.resolve_or_pass(l, r, sigma(pos(s.pivot)).var);
    }
    case StepKind::Symmetry:
        return emit_expanded(b, trace, s.source, s.sigma.then(sigma));
    }
    fail("InvalidTrace", "unreachable step kind");
}

} // namespace

Derivation replay_symmetry(const Derivation& trace, int id) {
    if (id < 1 || id > trace.size()) fail("InvalidTrace", "step id out of range");
    const ProofStep& s = trace.step(id);
    if (s.kind != StepKind::Symmetry) fail("InvalidTrace", "step is not a symmetry step");
    DerivationBuilder b;
    int out = emit_expanded(b, trace, s.source, s.sigma);
    if (!b.clause(out).subset_of(s.clause))
        fail("InvalidTrace", "replay did not reproduce the symmetry image");
    return b.take();
}

Derivation expand_symmetries(const Derivation& trace) {
    DerivationBuilder b;
    std::vector<int> ids(static_cast<std::size_t>(trace.size()) + 1, 0);
    for (int id = 1; id <= trace.size(); ++id) {
        const ProofStep& s = trace.step(id);
        switch (s.kind) {
        case StepKind::Axiom:
            ids[static_cast<std::size_t>(id)] = b.axiom(s.clause);
            break;
        case StepKind::Resolve:
            ids[static_cast<std::size_t>(id)] = b.resolve_or_pass(
                ids[static_cast<std::size_t>(s.left)], ids[static_cast<std::size_t>(s.right)], s.pivot);
            break;
        case StepKind::Symmetry:
            ids[static_cast<std::size_t>(id)] = emit_expanded(b, trace, s.source, s.sigma);
            break;
        }
    }
    return b.take();
}

} // namespace symres
