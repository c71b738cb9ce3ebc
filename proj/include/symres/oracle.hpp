#ifndef SYMRES_ORACLE_HPP
#define SYMRES_ORACLE_HPP

#include "symres/cnf.hpp"
#include "symres/graphs.hpp"
#include "symres/trace.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symres {

// Exhaustive SAT over the formula's symbol table, <= 24 variables.
// Returns the lexicographically first model (variable 1 most significant,
// false < true), or nullopt when unsatisfiable.
std::optional<std::vector<bool>> sat_bruteforce(const CnfFormula& f);

bool satisfiable(const CnfFormula& f);

// All isomorphisms g1 -> g2 as vertex maps (index v-1 holds the image of v).
// Color-class backtracking; <= 10 vertices.
std::vector<std::vector<int>> iso_bruteforce(const ColoredGraph& g1, const ColoredGraph& g2);

// All color-preserving automorphisms; <= 12 vertices.
std::vector<std::vector<int>> automorphisms_bruteforce(const ColoredGraph& g);

// Expands the symmetry step `id` into a pure-resolution derivation of a
// clause subsuming sigma(source clause) from sigma-images of the source's
// ancestry. Nested symmetry steps are expanded recursively.
Derivation replay_symmetry(const Derivation& trace, int id);

// Rewrites a whole derivation into pure resolution by expanding every
// symmetry step in place.
Derivation expand_symmetries(const Derivation& trace);

} // namespace symres

#endif
