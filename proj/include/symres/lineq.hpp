#ifndef SYMRES_LINEQ_HPP
#define SYMRES_LINEQ_HPP

#include "symres/cnf.hpp"
#include "symres/fp.hpp"

#include <set>

namespace symres {

// CNF encoding of a.x = b over F_p on variables xi(i,k) ("x_i = k").
// A row is encoded by forbidding every assignment on supp(a) that violates
// the equation: one all-negative clause C_a(x) per bad x with supp(x) <= supp(a).

// C_a(x) = \/_{i in supp(a)} ~xi(i, x_i)
Clause row_clause(const FpVector& a, const FpVector& x);

// \/_k xi(i, k) ("coordinate i holds some value"); i is 1-based.
Clause v_clause(std::size_t i, unsigned p);

struct RowEncoding {
    FpVector a;
    unsigned b = 0;
    std::set<Clause> clauses;
};

// a = 0, b != 0 gives the single empty clause; a = 0, b = 0 gives no clauses.
// Scaling invariant: encode_row(k*a, k*b) == encode_row(a, b) for k != 0.
RowEncoding encode_row(const FpVector& a, unsigned b);

std::set<Clause> encode_rows(const FpMatrix& a, const FpVector& b);

// F(A,b) /\ V; satisfiable iff Ax = b is solvable.
CnfFormula encode_system(const FpMatrix& a, const FpVector& b);

// Delta_d: xi(i,k) -> xi(i, k + d_i). Stabilizes F(a,b) iff a.d = 0.
Renaming translation_symmetry(const FpVector& d);

} // namespace symres

#endif
