#include "symres/checker.hpp"
#include "symres/errors.hpp"

#include <algorithm>

namespace symres {

std::string to_string(CheckMode mode) {
    switch (mode) {
    case CheckMode::Resolution: return "Resolution";
    case CheckMode::SrcI: return "SRC-I";
    case CheckMode::SrcII: return "SRC-II";
    }
    return "?";
}

namespace {

std::vector<std::set<Clause>> ancestry_table(const Derivation& trace) {
    std::vector<std::set<Clause>> anc(static_cast<std::size_t>(trace.size()) + 1);
    for (int id = 1; id <= trace.size(); ++id) {
        const ProofStep& s = trace.step(id);
        auto& a = anc[static_cast<std::size_t>(id)];
        switch (s.kind) {
        case StepKind::Axiom:
            a.insert(s.clause);
            break;
        case StepKind::Resolve: {
            const auto& l = anc[static_cast<std::size_t>(s.left)];
            const auto& r = anc[static_cast<std::size_t>(s.right)];
            a = l;
            a.insert(r.begin(), r.end());
            break;
        }
        case StepKind::Symmetry:
            for (const Clause& c : anc[static_cast<std::size_t>(s.source)])
                a.insert(s.sigma(c));
            break;
        }
    }
    return anc;
}

} // namespace

std::set<Clause> ancestry(const Derivation& trace, int step_id) {
    if (step_id < 1 || step_id > trace.size())
        fail("BadStepRef", "step reference " + std::to_string(step_id) + " out of range");
    return ancestry_table(trace)[static_cast<std::size_t>(step_id)];
}

CheckReport check(const CnfFormula& formula, const Derivation& trace, CheckMode mode,
                  const CheckOptions& opts) {
    CheckReport rep;
    rep.mode_used = mode;
    rep.length = trace.length();
    rep.derives_bottom = trace.derives_bottom();

    auto anc = ancestry_table(trace);
    // sym_history[id]: any symmetry step occurs in id's derivation DAG.
    std::vector<char> sym_history(static_cast<std::size_t>(trace.size()) + 1, 0);

    auto flag = [&](int id, std::string reason) {
        rep.failures.emplace_back(id, std::move(reason));
    };
    auto ref_ok = [&](int id, int ref) {
        if (ref < 1 || ref >= id) {
            flag(id, "BadStepRef");
            return false;
        }
        return true;
    };

    for (int id = 1; id <= trace.size(); ++id) {
        const ProofStep& s = trace.step(id);
        switch (s.kind) {
        case StepKind::Axiom:
            if (!formula.clauses().count(s.clause)) flag(id, "AxiomNotInFormula");
            break;
        case StepKind::Resolve: {
            if (!ref_ok(id, s.left) || !ref_ok(id, s.right)) break;
            sym_history[static_cast<std::size_t>(id)] =
                sym_history[static_cast<std::size_t>(s.left)] ||
                sym_history[static_cast<std::size_t>(s.right)];
            const Clause& l = trace.step(s.left).clause;
            const Clause& r = trace.step(s.right).clause;
            // Tolerate either premise orientation.
            const Clause* cp = l.contains(pos(s.pivot)) ? &l : &r;
            const Clause* cn = (cp == &l) ? &r : &l;
            if (!cp->contains(pos(s.pivot)) || !cn->contains(neg(s.pivot))) {
                flag(id, "PivotAbsent");
                break;
            }
            if (resolve(*cp, *cn, s.pivot) != s.clause) flag(id, "StoredClauseMismatch");
            break;
        }
        case StepKind::Symmetry: {
            if (!ref_ok(id, s.source)) break;
            sym_history[static_cast<std::size_t>(id)] = 1;
            if (mode == CheckMode::Resolution) {
                flag(id, "SymmetryNotAllowed");
                break;
            }
            if (s.scope == SymScope::Local && mode == CheckMode::SrcI) {
                flag(id, "LocalSymmetryNotAllowed");
                break;
            }
            if (opts.strict && sym_history[static_cast<std::size_t>(s.source)]) {
                flag(id, "ChainedSymmetry");
                break;
            }
            if (s.sigma(trace.step(s.source).clause) != s.clause) {
                flag(id, "StoredClauseMismatch");
                break;
            }
            if (s.scope == SymScope::Global) {
                if (s.sigma(formula.clauses()) != formula.clauses()) flag(id, "ScopeViolation");
            } else {
                const auto& src_anc = anc[static_cast<std::size_t>(s.source)];
                bool ok = std::all_of(src_anc.begin(), src_anc.end(), [&](const Clause& c) {
                    return formula.clauses().count(s.sigma(c)) != 0;
                });
                if (!ok) flag(id, "ScopeViolation");
            }
            break;
        }
        }
    }
    rep.valid = rep.failures.empty();
    return rep;
}

} // namespace symres
