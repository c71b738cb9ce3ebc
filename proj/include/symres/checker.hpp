#ifndef SYMRES_CHECKER_HPP
#define SYMRES_CHECKER_HPP

#include "symres/trace.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symres {

enum class CheckMode { Resolution, SrcI, SrcII };

struct CheckReport {
    bool valid = false;
    CheckMode mode_used = CheckMode::Resolution;
    int length = 0;
    bool derives_bottom = false;
    std::vector<std::pair<int, std::string>> failures; // (step id, reason)
};

struct CheckOptions {
    // Reject symmetry steps whose source history itself contains symmetry
    // steps (the conservative reading of the local rule).
    bool strict = false;
};

// Formula clauses a step's clause is pure-resolution-derivable from:
// axiom -> {clause}; resolve -> union of premises; symmetry -> sigma-image
// of the source's ancestry.
std::set<Clause> ancestry(const Derivation& trace, int step_id);

CheckReport check(const CnfFormula& formula, const Derivation& trace, CheckMode mode,
                  const CheckOptions& opts = {});

std::string to_string(CheckMode mode);

} // namespace symres

#endif
