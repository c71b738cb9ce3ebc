#ifndef SYMRES_MP_PROVE_HPP
#define SYMRES_MP_PROVE_HPP

#include "symres/cfi.hpp"
#include "symres/trace.hpp"

#include <vector>

namespace symres {

// r: xi(j,0) -> y_{a_j,a_j}, xi(j,1) -> y_{a_j,b_j}
Renaming bridge_renaming(const Multipede& mp);

// F1 = F(MP(G), MP(G))
CnfFormula mp_f1(const Multipede& mp);

// F0 = F(MP(G)_{a_w}, MP(G)_{b_w}) for the individualized foot w.
CnfFormula mp_f0(const Multipede& mp, int foot);

// Derives r(C_{M(G)_{v,*}}(x_B)) from F1 for every gadget v and odd
// B <= N(v); steps per clause = |P_even(N(v))|.
Derivation bridge_to_linear(const BipartiteGraph& g);

// psi_d for d in ker M(G): swaps the second index a<->b on feet in
// D = supp(d) and shifts middle targets by D's incident part.
// Throws NotInKernel.
Renaming lift_symmetry(const Multipede& mp, const std::vector<unsigned>& d);

struct MpRefutation {
    CnfFormula f0;
    Derivation derivation;
};

// SRC-II refutation of F0; requires ker M(G) = 0 (HasAutomorphisms
// otherwise) and G connected (Disconnected).
MpRefutation refute_multipede(const BipartiteGraph& g, int foot);

} // namespace symres

#endif
