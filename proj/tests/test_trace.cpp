#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/errors.hpp"
#include "symres/trace.hpp"

using namespace symres;

namespace {
const VarKey x = VarKey::raw(1);
const VarKey y = VarKey::raw(2);
const VarKey z = VarKey::raw(3);
} // namespace

TEST_CASE("unit refutation: length 1, axioms free") {
    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x)}));
    int a2 = b.axiom(Clause({neg(x)}));
    int r = b.resolve_step(a1, a2, x);
    CHECK(b.clause(r).empty());
    CHECK(b.length() == 1);
    CHECK(b.derivation().derives_bottom());
    CHECK_FALSE(b.derivation().has_symmetry());
}

TEST_CASE("builder normalizes premise orientation and dedups axioms") {
    DerivationBuilder b;
    int a1 = b.axiom(Clause({neg(x), pos(y)}));
    int a2 = b.axiom(Clause({pos(x)}));
    CHECK(b.axiom(Clause({pos(x)})) == a2);
    int r = b.resolve_step(a1, a2, x); // swapped premises are accepted
    CHECK(b.clause(r) == Clause({pos(y)}));
    CHECK(b.derivation().step(r).left == a2);
    CHECK_THROWS_AS(b.resolve_step(a1, a2, z), Error);
    CHECK_THROWS_WITH_AS(b.resolve_step(0, a1, x), doctest::Contains("BadStepRef"), Error);
}

TEST_CASE("resolve_or_pass passes premises that lack the pivot") {
    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(y)}));
    int a2 = b.axiom(Clause({neg(x)}));
    CHECK(b.resolve_or_pass(a1, a2, x) == a1);
    CHECK(b.length() == 0);
    int a3 = b.axiom(Clause({pos(x)}));
    CHECK(b.resolve_or_pass(a3, a2, x) == 4); // a real step this time
    CHECK(b.length() == 1);
}

TEST_CASE("identity symmetry duplicates at length +1") {
    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), neg(y)}));
    int s = b.symmetry(a1, Renaming(), SymScope::Global);
    CHECK(b.clause(s) == b.clause(a1));
    CHECK(b.length() == 1);
    CHECK(b.derivation().has_symmetry());
}

TEST_CASE("concat: identity, chaining, missing premise") {
    DerivationBuilder d1;
    int a1 = d1.axiom(Clause({pos(x), pos(y)}));
    int a2 = d1.axiom(Clause({neg(x)}));
    d1.resolve_step(a1, a2, x); // derives {y}

    DerivationBuilder d2;
    int b1 = d2.axiom(Clause({pos(y)})); // derived in d1
    int b2 = d2.axiom(Clause({neg(y)})); // from the pool
    d2.resolve_step(b1, b2, y);

    std::set<Clause> pool = {Clause({neg(y)})};
    Derivation whole = concat(d1.derivation(), d2.derivation(), pool);
    CHECK(whole.length() == d1.length() + d2.length());
    CHECK(whole.derives_bottom());

    CHECK(concat(d1.derivation(), Derivation{}, {}).size() == d1.size());
    CHECK_THROWS_WITH_AS(concat(d1.derivation(), d2.derivation(), {}),
                         doctest::Contains("MissingPremise"), Error);
}

TEST_CASE("weaken_lift replays over a weaker host") {
    DerivationBuilder ref;
    ref.resolve_step(ref.axiom(Clause({pos(x)})), ref.axiom(Clause({neg(x)})), x);
    Clause d({pos(VarKey::raw(7))});

    auto host = CnfFormula::from_clauses(
        {Clause({pos(x)}).union_with(d), Clause({neg(x)}).union_with(d)});
    Derivation lifted = weaken_lift(ref.derivation(), host, d);
    CHECK(lifted.length() <= ref.length());
    CHECK(lifted.steps.back().clause.subset_of(d));

    // a strictly stronger host clause may lead below d
    auto strong = CnfFormula::from_clauses({Clause({pos(x)}), Clause({neg(x)}).union_with(d)});
    Derivation lifted2 = weaken_lift(ref.derivation(), strong, d);
    CHECK(lifted2.steps.back().clause.subset_of(d));

    auto weak = CnfFormula::from_clauses({Clause({pos(x)}).union_with(d)});
    CHECK_THROWS_WITH_AS(weaken_lift(ref.derivation(), weak, d),
                         doctest::Contains("HostTooWeak"), Error);
}

TEST_CASE("trace round trip") {
    std::set<Clause> cs = {Clause({pos(x), pos(y)}), Clause({neg(x), pos(y)}),
                           Clause({neg(y), pos(z)}), Clause({neg(y), neg(z)})};
    CnfFormula f = CnfFormula::from_clauses(cs);

    DerivationBuilder b;
    int a1 = b.axiom(Clause({pos(x), pos(y)}));
    int a2 = b.axiom(Clause({neg(x), pos(y)}));
    int r1 = b.resolve_step(a1, a2, x);
    Renaming sw = Renaming::make({{pos(z), neg(z)}, {neg(z), pos(z)}});
    int s1 = b.symmetry(b.axiom(Clause({neg(y), pos(z)})), sw, SymScope::Local);
    int r2 = b.resolve_step(s1, r1, y);
    b.resolve_step(b.axiom(Clause({neg(y), pos(z)})), r1, y);
    (void)r2;

    std::string text = emit_trace(b.derivation(), f);
    CHECK(text.rfind("srt 1\n", 0) == 0);
    Derivation back = parse_trace(text, f);
    REQUIRE(back.size() == b.size());
    for (int i = 1; i <= back.size(); ++i) {
        CHECK(back.step(i).kind == b.derivation().step(i).kind);
        CHECK(back.step(i).clause == b.clause(i));
    }
    CHECK(emit_trace(back, f) == text);
}

TEST_CASE("trace parse errors") {
    CnfFormula f = CnfFormula::from_clauses({Clause({pos(x)})});
    CHECK_THROWS_AS(parse_trace("nope\n", f), Error);
    CHECK_THROWS_WITH_AS(parse_trace("srt 1\nr 0 1 1 0\n", f),
                         doctest::Contains("BadStepRef"), Error);
    CHECK_THROWS_WITH_AS(parse_trace("srt 1\na 1 0\ns g 1 1 ; 1 0\n", f),
                         doctest::Contains("BadRenamingSpec"), Error);
}
