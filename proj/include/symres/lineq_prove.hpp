#ifndef SYMRES_LINEQ_PROVE_HPP
#define SYMRES_LINEQ_PROVE_HPP

#include "symres/lineq.hpp"
#include "symres/trace.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace symres {

// Returns the id of an already-available clause that is a subset of the
// requested clause (introducing it into the builder if needed).
using ClauseProvider = std::function<int(const Clause&)>;

// Refutation of Omega(theta) /\ V in exactly (p^(|theta|+1)-p)/(p-1)
// resolution steps; axioms are looked up in `formula` (subsets accepted).
// Throws MissingClause.
Derivation omega_refutation(const CnfFormula& formula,
                            const std::vector<std::size_t>& theta);

// Sum Resolution: derives (a subset of) target from
// F(a1,b1) u F(a2,b2) u V in <= 2(p^|theta|-1) steps,
// theta = lv(a1,a2). `first` supplies F(a1,b1) clauses (by default fresh
// axioms); F(a2,b2) and V clauses are taken as axioms.
// Throws TargetNotInSum.
int sum_resolution(DerivationBuilder& b, const FpVector& a1, unsigned b1,
                   const FpVector& a2, unsigned b2, const Clause& target,
                   const ClauseProvider* first = nullptr);

struct CaseSplit {
    bool symmetric = false;
    // Composite witnesses (see classify_case)
    FpVector d, v, w, v1, v2;
    unsigned k1 = 0, k2 = 0;
};

// Symmetric sum iff every translation symmetry of F(sum A, sum b) is the
// restriction of one of F(A, b): diag(sA).ker(sA) <= diag(sA).ker(A).
// Otherwise produces (d, v, w) with vA + w diag(sA) = 0, w diag(sA) d != 0,
// and the split data k1, k2, v1 = v - k1*1, v2 = k2*1 - v.
CaseSplit classify_case(const FpMatrix& a, const FpVector& b);

// One equation as a (row, rhs) pair.
using Row = std::pair<FpVector, unsigned>;

// SRC-II derivation of every clause of H <= F(sum A, sum b): returns, per
// requested clause, the id of a derived subset of it.
std::map<Clause, int> derive_sum_clauses(DerivationBuilder& b,
                                         const std::vector<Row>& rows,
                                         const std::set<Clause>& h);

// Full pipeline: certificate v with vA = 0, v.b = 1, then bottom from
// the scaled system diag(v)A. Throws SystemConsistent.
Derivation refute_system(const FpMatrix& a, const FpVector& b);

} // namespace symres

#endif
