#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/checker.hpp"

using namespace symres;

namespace {

const VarKey x = VarKey::raw(1);
const VarKey y = VarKey::raw(2);
const VarKey z = VarKey::raw(3);

bool has_reason(const CheckReport& r, const std::string& reason) {
    for (const auto& [id, why] : r.failures)
        if (why == reason) return true;
    return false;
}

} // namespace

TEST_CASE("pure resolution refutation validates in every mode") {
    CnfFormula f = CnfFormula::from_clauses({Clause({pos(x)}), Clause({neg(x)})});
    DerivationBuilder b;
    b.resolve_step(b.axiom(Clause({pos(x)})), b.axiom(Clause({neg(x)})), x);
    for (auto mode : {CheckMode::Resolution, CheckMode::SrcI, CheckMode::SrcII}) {
        CheckReport rep = check(f, b.derivation(), mode);
        CHECK(rep.valid);
        CHECK(rep.derives_bottom);
        CHECK(rep.length == 1);
    }
}

TEST_CASE("axiom must belong to the formula") {
    CnfFormula f = CnfFormula::from_clauses({Clause({pos(x)})});
    DerivationBuilder b;
    b.axiom(Clause({pos(y)}));
    CheckReport rep = check(f, b.derivation(), CheckMode::Resolution);
    CHECK_FALSE(rep.valid);
    CHECK(has_reason(rep, "AxiomNotInFormula"));
}

TEST_CASE("mutated stored clause is rejected") {
    CnfFormula f = CnfFormula::from_clauses({Clause({pos(x), pos(y)}), Clause({neg(x)})});
    DerivationBuilder b;
    b.resolve_step(b.axiom(Clause({pos(x), pos(y)})), b.axiom(Clause({neg(x)})), x);
    Derivation d = b.take();
    d.steps.back().clause = Clause({neg(y)}); // flip the literal
    CheckReport rep = check(f, d, CheckMode::Resolution);
    CHECK(has_reason(rep, "StoredClauseMismatch"));
}

TEST_CASE("mode gating of symmetry steps") {
    std::set<Clause> cs = {Clause({pos(x), pos(y)}), Clause({neg(x), neg(y)})};
    CnfFormula f = CnfFormula::from_clauses(cs);
    Renaming swap = Renaming::make({{pos(x), pos(y)}, {pos(y), pos(x)}});

    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), pos(y)}));
    b.symmetry(a1, swap, SymScope::Global);
    Derivation global = b.take();

    CHECK(has_reason(check(f, global, CheckMode::Resolution), "SymmetryNotAllowed"));
    CHECK(check(f, global, CheckMode::SrcI).valid);
    CHECK(check(f, global, CheckMode::SrcII).valid);

    DerivationBuilder b2;
    int a2 = b2.axiom(Clause({pos(x), pos(y)}));
    b2.symmetry(a2, swap, SymScope::Local);
    Derivation local = b2.take();
    CHECK(has_reason(check(f, local, CheckMode::SrcI), "LocalSymmetryNotAllowed"));
    CHECK(check(f, local, CheckMode::SrcII).valid);
}

TEST_CASE("global scope needs sigma(F) = F") {
    CnfFormula f = CnfFormula::from_clauses({Clause({pos(x)}), Clause({pos(y), pos(z)})});
    Renaming swap = Renaming::make({{pos(x), pos(y)}, {pos(y), pos(x)}});
    DerivationBuilder b;
    b.symmetry(b.axiom(Clause({pos(x)})), swap, SymScope::Global);
    CHECK(has_reason(check(f, b.derivation(), CheckMode::SrcI), "ScopeViolation"));
}

TEST_CASE("local scope checks the ancestry image, not the whole formula") {
    // sigma maps the used axioms into F but would move {z} outside it
    std::set<Clause> cs = {Clause({pos(x), pos(y)}), Clause({neg(x), pos(y)}),
                           Clause({pos(z)})};
    CnfFormula f = CnfFormula::from_clauses(cs);
    Renaming sw = Renaming::make({{pos(x), neg(x)}, {neg(x), pos(x)}});

    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), pos(y)}));
    int a2 = b.axiom(Clause({neg(x), pos(y)}));
    int r = b.resolve_step(a1, a2, x);
    b.symmetry(r, sw, SymScope::Local);
    CHECK(check(f, b.derivation(), CheckMode::SrcII).valid);
    CHECK_FALSE(check(f, b.derivation(), CheckMode::SrcI).valid);

    // now break the scope: rename x into a fresh variable
    DerivationBuilder b2;
    int c1 = b2.axiom(Clause({pos(x), pos(y)}));
    Renaming out = Renaming::make({{pos(x), pos(z)}, {pos(z), pos(x)}});
    b2.symmetry(c1, out, SymScope::Local);
    CHECK(has_reason(check(f, b2.derivation(), CheckMode::SrcII), "ScopeViolation"));
}

TEST_CASE("ancestry fixpoint") {
    std::set<Clause> cs = {Clause({pos(x), pos(y)}), Clause({neg(x), pos(y)})};
    CnfFormula f = CnfFormula::from_clauses(cs);
    Renaming sw = Renaming::make({{pos(y), neg(y)}, {neg(y), pos(y)}});

    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), pos(y)}));
    int a2 = b.axiom(Clause({neg(x), pos(y)}));
    int r = b.resolve_step(a1, a2, x);
    int s = b.symmetry(r, sw, SymScope::Local);
    int s2 = b.symmetry(s, sw, SymScope::Local);

    CHECK(ancestry(b.derivation(), a1) == std::set<Clause>{Clause({pos(x), pos(y)})});
    CHECK(ancestry(b.derivation(), r) == cs);
    std::set<Clause> flipped = {Clause({pos(x), neg(y)}), Clause({neg(x), neg(y)})};
    CHECK(ancestry(b.derivation(), s) == flipped);
    CHECK(ancestry(b.derivation(), s2) == cs); // sw is an involution
}

TEST_CASE("chained symmetry: recursive ancestry vs strict mode") {
    // sigma1 then sigma2; the composed image is back inside F even though
    // the intermediate one is not required to be
    std::set<Clause> cs = {Clause({pos(x), pos(y)}), Clause({neg(x), pos(y)})};
    CnfFormula f = CnfFormula::from_clauses(cs);
    Renaming sw = Renaming::make({{pos(x), neg(x)}, {neg(x), pos(x)}});

    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), pos(y)}));
    int a2 = b.axiom(Clause({neg(x), pos(y)}));
    int r = b.resolve_step(a1, a2, x);
    int s = b.symmetry(r, sw, SymScope::Local);
    b.symmetry(s, sw, SymScope::Local);

    CHECK(check(f, b.derivation(), CheckMode::SrcII).valid);
    CheckOptions strict{.strict = true};
    CHECK(has_reason(check(f, b.derivation(), CheckMode::SrcII, strict), "ChainedSymmetry"));
}
