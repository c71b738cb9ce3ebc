#include "symres/trace.hpp"
#include "symres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symres {

int Derivation::length() const {
    int n = 0;
    for (const auto& s : steps)
        if (s.kind != StepKind::Axiom) ++n;
    return n;
}

bool Derivation::derives_bottom() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const ProofStep& s) { return s.clause.empty(); });
}

bool Derivation::has_symmetry() const {
    return std::any_of(steps.begin(), steps.end(),
                       [](const ProofStep& s) { return s.kind == StepKind::Symmetry; });
}

void DerivationBuilder::check_ref(int id) const {
    if (id < 1 || id > d_.size())
        fail("BadStepRef", "step reference " + std::to_string(id) + " out of range");
}

int DerivationBuilder::axiom(const Clause& c) {
    if (auto it = axiom_ids_.find(c); it != axiom_ids_.end()) return it->second;
    ProofStep s;
    s.kind = StepKind::Axiom;
    s.clause = c;
    d_.steps.push_back(std::move(s));
    axiom_ids_.emplace(c, d_.size());
    return d_.size();
}

int DerivationBuilder::resolve_step(int left, int right, const VarKey& pivot) {
    check_ref(left);
    check_ref(right);
    const Clause& l = clause(left);
    // Normalize so that the left premise holds the positive pivot literal.
    if (!l.contains(pos(pivot)) && l.contains(neg(pivot))) std::swap(left, right);
    ProofStep s;
    s.kind = StepKind::Resolve;
    s.clause = resolve(clause(left), clause(right), pivot);
    s.left = left;
    s.right = right;
    s.pivot = pivot;
    d_.steps.push_back(std::move(s));
    return d_.size();
}

int DerivationBuilder::resolve_or_pass(int left, int right, const VarKey& pivot) {
    check_ref(left);
    check_ref(right);
    bool l_has = clause(left).contains_var(pivot);
    bool r_has = clause(right).contains_var(pivot);
    if (!l_has) return left;
    if (!r_has) return right;
    return resolve_step(left, right, pivot);
}

int DerivationBuilder::symmetry(int source, const Renaming& sigma, SymScope scope) {
    check_ref(source);
    ProofStep s;
    s.kind = StepKind::Symmetry;
    s.clause = sigma(clause(source));
    s.source = source;
    s.sigma = sigma;
    s.scope = scope;
    d_.steps.push_back(std::move(s));
    return d_.size();
}

Derivation concat(const Derivation& d1, const Derivation& d2, const std::set<Clause>& pool) {
    // Index of clauses available after d1.
    std::map<Clause, int> derived;
    for (int id = 1; id <= d1.size(); ++id) derived.emplace(d1.step(id).clause, id);

    Derivation out = d1;
    std::vector<int> remap(static_cast<std::size_t>(d2.size()) + 1, 0);
    for (int id = 1; id <= d2.size(); ++id) {
        const ProofStep& s = d2.step(id);
        if (s.kind == StepKind::Axiom) {
            if (auto it = derived.find(s.clause); it != derived.end()) {
                remap[static_cast<std::size_t>(id)] = it->second;
                continue;
            }
            if (!pool.count(s.clause))
                fail("MissingPremise", "axiom of second derivation is neither derived "
                                       "in the first nor available: " + to_string(s.clause));
            out.steps.push_back(s);
            derived.emplace(s.clause, out.size());
            remap[static_cast<std::size_t>(id)] = out.size();
            continue;
        }
        ProofStep t = s;
        if (t.kind == StepKind::Resolve) {
            t.left = remap[static_cast<std::size_t>(s.left)];
            t.right = remap[static_cast<std::size_t>(s.right)];
        } else {
            t.source = remap[static_cast<std::size_t>(s.source)];
        }
        out.steps.push_back(std::move(t));
        remap[static_cast<std::size_t>(id)] = out.size();
    }
    return out;
}

Derivation weaken_lift(const Derivation& refutation, const CnfFormula& host, const Clause& d) {
    DerivationBuilder b;
    std::vector<int> remap(static_cast<std::size_t>(refutation.size()) + 1, 0);
    for (int id = 1; id <= refutation.size(); ++id) {
        const ProofStep& s = refutation.step(id);
        switch (s.kind) {
        case StepKind::Axiom: {
            Clause want = s.clause.union_with(d);
            const Clause* found = nullptr;
            for (const auto& h : host.clauses())
                if (h.subset_of(want) && (!found || h.size() < found->size())) found = &h;
            if (!found)
                fail("HostTooWeak", "host has no clause subsuming " + to_string(want));
            remap[static_cast<std::size_t>(id)] = b.axiom(*found);
            break;
        }
        case StepKind::Resolve:
            remap[static_cast<std::size_t>(id)] =
                b.resolve_or_pass(remap[static_cast<std::size_t>(s.left)],
                                  remap[static_cast<std::size_t>(s.right)], s.pivot);
            break;
        case StepKind::Symmetry:
            fail("MissingPremise", "weaken_lift expects a pure resolution refutation");
        }
    }
    return b.take();
}

namespace {

int lit_int(const Literal& l, const CnfFormula& f) {
    int v = f.symbols().index(l.var);
    return l.positive ? v : -v;
}

void emit_clause(std::ostringstream& os, const Clause& c, const CnfFormula& f) {
    std::vector<int> ints;
    for (const auto& l : c.literals()) ints.push_back(lit_int(l, f));
    std::sort(ints.begin(), ints.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (int v : ints) os << v << ' ';
    os << '0';
}

} // namespace

std::string emit_trace(const Derivation& d, const CnfFormula& formula) {
    std::ostringstream os;
    os << "srt 1\n";
    for (const auto& s : d.steps) {
        switch (s.kind) {
        case StepKind::Axiom:
            os << "a ";
            emit_clause(os, s.clause, formula);
            break;
        case StepKind::Resolve:
            os << "r " << s.left << ' ' << s.right << ' '
               << formula.symbols().index(s.pivot) << ' ';
            emit_clause(os, s.clause, formula);
            break;
        case StepKind::Symmetry: {
            os << "s " << (s.scope == SymScope::Global ? 'g' : 'l') << ' ' << s.source;
            for (const auto& [from, to] : s.sigma.positive_pairs())
                os << ' ' << lit_int(from, formula) << ':' << lit_int(to, formula);
            os << " ; ";
            emit_clause(os, s.clause, formula);
            break;
        }
        }
        os << '\n';
    }
    return os.str();
}

namespace {

Literal int_lit(int v, const CnfFormula& f) {
    int idx = std::abs(v);
    if (idx < 1 || idx > f.symbols().size())
        fail("BadStepRef", "literal " + std::to_string(v) + " out of range");
    return Literal{f.symbols().key(idx), v > 0};
}

} // namespace

Derivation parse_trace(const std::string& text, const CnfFormula& formula) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.substr(0, 5) != "srt 1")
        fail("BadStepRef", "missing 'srt 1' header");

    DerivationBuilder b;
    std::vector<int> ids; // file line id -> builder id (axiom dedup may merge lines)
    auto ref = [&](int id) {
        if (id < 1 || static_cast<std::size_t>(id) > ids.size())
            fail("BadStepRef", "step reference " + std::to_string(id) + " out of range");
        return ids[static_cast<std::size_t>(id) - 1];
    };
    auto read_clause = [&](std::istringstream& ls) {
        std::vector<Literal> lits;
        int v;
        while (ls >> v && v != 0) lits.push_back(int_lit(v, formula));
        return Clause(lits);
    };

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag.empty() || tag[0] == '#') continue;
        if (tag == "a") {
            ids.push_back(b.axiom(read_clause(ls)));
        } else if (tag == "r") {
            int left, right, pivot;
            if (!(ls >> left >> right >> pivot))
                fail("BadStepRef", "malformed resolvent line: " + line);
            Clause stored = read_clause(ls);
            int id = b.resolve_step(ref(left), ref(right), int_lit(pivot, formula).var);
            if (b.clause(id) != stored)
                fail("BadStepRef", "stored resolvent disagrees with recomputation: " + line);
            ids.push_back(id);
        } else if (tag == "s") {
            std::string scope_tok;
            int source;
            if (!(ls >> scope_tok >> source) || (scope_tok != "g" && scope_tok != "l"))
                fail("BadRenamingSpec", "malformed symmetry line: " + line);
            std::vector<std::pair<Literal, Literal>> pairs;
            std::string tok;
            while (ls >> tok && tok != ";") {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    fail("BadRenamingSpec", "malformed renaming pair: " + tok);
                int from = 0, to = 0;
                try {
                    from = std::stoi(tok.substr(0, colon));
                    to = std::stoi(tok.substr(colon + 1));
                } catch (const std::exception&) {
                    fail("BadRenamingSpec", "malformed renaming pair: " + tok);
                }
                pairs.emplace_back(int_lit(from, formula), int_lit(to, formula));
            }
            if (tok != ";")
                fail("BadRenamingSpec", "symmetry line missing ';': " + line);
            Renaming sigma = Renaming::make(pairs);
            Clause stored = read_clause(ls);
            int id = b.symmetry(ref(source), sigma,
                                scope_tok == "g" ? SymScope::Global : SymScope::Local);
            if (b.clause(id) != stored)
                fail("BadRenamingSpec", "stored clause disagrees with recomputation: " + line);
            ids.push_back(id);
        } else {
            fail("BadStepRef", "unknown step tag: " + tag);
        }
    }
    return b.take();
}

} // namespace symres
