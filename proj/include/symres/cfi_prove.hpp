#ifndef SYMRES_CFI_PROVE_HPP
#define SYMRES_CFI_PROVE_HPP

#include "symres/cfi.hpp"
#include "symres/trace.hpp"

#include <vector>

namespace symres {

// F(X(G), X̃(G)) together with the two instances (shared vertex ids).
struct CfiPairEncoding {
    CfiGraph x, xt;
    CnfFormula formula;
};

CfiPairEncoding encode_cfi_pair(const Graph& base, const Edge& twist);

// The renaming induced by the graph automorphism of X(G) that swaps the
// a/b pairs along the simple base cycle and shifts middles by the two
// incident cycle edges. Verified to stabilize the formula.
Renaming cycle_automorphism(const CfiPairEncoding& enc, const std::vector<int>& cycle);

// Global-symmetry refutation of F(X(G), X̃(G)); length <= 6(|E| + Phi_4(G)).
Derivation refute_cfi(const Graph& base, const Edge& twist);

// 6(|E| + sum_v 4^deg(v)) over the component containing the twist.
long long cfi_budget(const Graph& base, const Edge& twist);

} // namespace symres

#endif
