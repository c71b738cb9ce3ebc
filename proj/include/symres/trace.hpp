#ifndef SYMRES_TRACE_HPP
#define SYMRES_TRACE_HPP

#include "symres/cnf.hpp"

#include <string>
#include <vector>

namespace symres {

enum class StepKind { Axiom, Resolve, Symmetry };
enum class SymScope { Global, Local };

struct ProofStep {
    StepKind kind = StepKind::Axiom;
    Clause clause; // the derived clause, always recomputable from the premises
    int left = 0, right = 0; // Resolve premises
    VarKey pivot{};
    int source = 0; // Symmetry premise
    Renaming sigma;
    SymScope scope = SymScope::Global;
};

// A derivation is a topologically ordered DAG of steps; ids are 1-based
// positions. Length counts only inference steps, never axioms, matching
// the |-_n convention where the axioms a_1..a_m are free.
struct Derivation {
    std::vector<ProofStep> steps;

    const ProofStep& step(int id) const { return steps.at(static_cast<std::size_t>(id) - 1); }
    int size() const { return static_cast<int>(steps.size()); }
    int length() const;
    bool derives_bottom() const;
    bool has_symmetry() const;
};

class DerivationBuilder {
public:
    // Appends an axiom (deduplicated: re-adding a clause returns the old id).
    int axiom(const Clause& c);

    // Appends a resolvent; premise order is normalized so the pivot is
    // positive on the left. Throws PivotAbsent.
    int resolve_step(int left, int right, const VarKey& pivot);

    // Resolve where either premise may already subsume the result (it lacks
    // the pivot); in that case no step is emitted and that premise's id is
    // returned. Used when replaying derivations over stronger clauses.
    int resolve_or_pass(int left, int right, const VarKey& pivot);

    int symmetry(int source, const Renaming& sigma, SymScope scope);

    const Clause& clause(int id) const { return d_.step(id).clause; }
    int size() const { return d_.size(); }
    int length() const { return d_.length(); }
    const Derivation& derivation() const { return d_; }
    Derivation take() { return std::move(d_); }

private:
    void check_ref(int id) const;

    Derivation d_;
    std::map<Clause, int> axiom_ids_;
};

// Composition per the derivation-combining lemmas: d2's axioms must be
// clauses derived in d1 or members of d1's clause pool (`pool`, typically
// d1's formula). Throws MissingPremise.
Derivation concat(const Derivation& d1, const Derivation& d2, const std::set<Clause>& pool);

// Weakening replay: given a pure-resolution refutation of some clause set A
// and a host containing, for every axiom c of the refutation, a clause
// subset of (c v d), replays the refutation over the host and derives a
// clause subset of d in at most length(refutation) steps.
// Throws HostTooWeak / MissingPremise.
Derivation weaken_lift(const Derivation& refutation, const CnfFormula& host, const Clause& d);

// Trace format "SRT 1". Literals are DIMACS integers of `formula`'s
// symbol table; ids are implicit 1-based line positions.
std::string emit_trace(const Derivation& d, const CnfFormula& formula);
Derivation parse_trace(const std::string& text, const CnfFormula& formula);

} // namespace symres

#endif
