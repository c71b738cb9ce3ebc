#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/cnf.hpp"
#include "symres/errors.hpp"

using namespace symres;

namespace {
const VarKey x = VarKey::raw(1);
const VarKey y = VarKey::raw(2);
const VarKey z = VarKey::raw(3);
} // namespace

TEST_CASE("clause is a set") {
    Clause c({pos(x), neg(y), pos(x)});
    CHECK(c.size() == 2);
    CHECK(c == Clause({neg(y), pos(x)}));
    CHECK(c.contains(pos(x)));
    CHECK_FALSE(c.contains(neg(x)));
    CHECK(c.contains_var(y));
    CHECK(c.subset_of(c.with(pos(z))));
    CHECK_FALSE(c.with(pos(z)).subset_of(c));
    CHECK(c.without(neg(y)) == Clause({pos(x)}));
    CHECK_FALSE(c.tautological());
    CHECK(c.with(neg(x)).tautological());
}

TEST_CASE("resolution rule") {
    Clause c1({pos(x), pos(y)}), c2({neg(x), pos(z)});
    CHECK(resolve(c1, c2, x) == Clause({pos(y), pos(z)}));
    CHECK(resolve(Clause({pos(x)}), Clause({neg(x)}), x).empty());
    CHECK_THROWS_WITH_AS(resolve(c1, c2, y), doctest::Contains("PivotAbsent"), Error);
    CHECK_THROWS_AS(resolve(c2, c1, x), Error); // orientation is strict

    // premises may contain a second complementary pair; it survives
    Clause t1({pos(x), pos(y), neg(z)}), t2({neg(x), neg(y), pos(z)});
    CHECK(resolve(t1, t2, x) == Clause({pos(y), neg(y), neg(z), pos(z)}));
}

TEST_CASE("renaming: construction and application") {
    // [(x, y)] extends to x->y, ~x->~y, everything else fixed
    Renaming r = Renaming::make({{pos(x), pos(y)}});
    CHECK(r(pos(x)) == pos(y));
    CHECK(r(neg(x)) == neg(y));
    CHECK(r(pos(z)) == pos(z));
    CHECK(r(Clause({pos(x), neg(z)})) == Clause({pos(y), neg(z)}));

    // swap with a sign flip
    Renaming f = Renaming::make({{pos(x), neg(y)}, {pos(y), neg(x)}});
    CHECK(f(pos(x)) == neg(y));
    CHECK(f(neg(y)) == pos(x));
    CHECK(f.then(f).is_identity());
    CHECK(f.inverse() == f);

    CHECK_THROWS_WITH_AS(Renaming::make({{pos(x), pos(y)}, {neg(x), pos(y)}}),
                         doctest::Contains("ComplementConflict"), Error);
    CHECK_THROWS_WITH_AS(Renaming::make({{pos(x), pos(z)}, {pos(y), pos(z)}}),
                         doctest::Contains("NotBijective"), Error);
}

TEST_CASE("renaming: stabilizes") {
    std::set<Clause> f = {Clause({pos(x), pos(y)}), Clause({neg(x), neg(y)})};
    Renaming swap = Renaming::make({{pos(x), pos(y)}, {pos(y), pos(x)}});
    CHECK(swap.stabilizes(f));
    Renaming to_z = Renaming::make({{pos(x), pos(z)}, {pos(z), pos(x)}});
    CHECK_FALSE(to_z.stabilizes(f));
}

TEST_CASE("symbol table order is lexicographic on keys") {
    std::set<VarKey> keys = {VarKey::iso(1, 1), VarKey::xi(2, 0), VarKey::xi(1, 1)};
    SymbolTable t = SymbolTable::from_keys(keys);
    CHECK(t.size() == 3);
    CHECK(t.index(VarKey::xi(1, 1)) == 1);
    CHECK(t.index(VarKey::xi(2, 0)) == 2);
    CHECK(t.index(VarKey::iso(1, 1)) == 3);
    CHECK(t.key(2) == VarKey::xi(2, 0));
    CHECK_FALSE(t.knows(VarKey::raw(9)));
}

TEST_CASE("dimacs round trip with symbols") {
    std::set<Clause> cs = {Clause({pos(VarKey::xi(1, 0)), neg(VarKey::xi(2, 1))}),
                           Clause({pos(VarKey::xi(2, 1))})};
    CnfFormula f = CnfFormula::from_clauses(cs, 2u);
    std::string text = emit_dimacs(f);
    CHECK(text.find("c mod 2") != std::string::npos);
    CHECK(text.find("c sym 1 xi 1 0") != std::string::npos);
    CnfFormula back = parse_dimacs(text);
    CHECK(back == f);
    CHECK(emit_dimacs(back) == text);
}

TEST_CASE("dimacs parse errors") {
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), Error);
}

TEST_CASE("apply_renaming maps a whole formula") {
    std::set<Clause> cs = {Clause({pos(x), neg(y)})};
    CnfFormula f = CnfFormula::from_clauses(cs);
    Renaming swap = Renaming::make({{pos(x), pos(y)}, {pos(y), pos(x)}});
    CnfFormula g = apply_renaming(swap, f);
    CHECK(g.clauses().count(Clause({pos(y), neg(x)})) == 1);
    CHECK(g.symbols() == f.symbols());
}
