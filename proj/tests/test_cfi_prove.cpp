#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/cfi_prove.hpp"
#include "symres/checker.hpp"
#include "symres/errors.hpp"
#include "symres/oracle.hpp"

using namespace symres;

namespace {

void check_valid(const Graph& base, const Edge& twist, bool expect_global) {
    CfiPairEncoding enc = encode_cfi_pair(base, twist);
    Derivation d = refute_cfi(base, twist);
    CHECK(d.derives_bottom());
    CHECK(d.length() <= cfi_budget(base, twist));
    auto rep = check(enc.formula, d, CheckMode::SrcI);
    CHECK(rep.valid);
    if (!rep.valid)
        for (auto& [step, msg] : rep.failures) MESSAGE(step << ": " << msg);
    bool global = false;
    for (const auto& s : d.steps)
        global |= s.kind == StepKind::Symmetry && s.scope == SymScope::Global;
    CHECK(global == expect_global);
    // the expanded pure-resolution witness stays valid
    auto flat = check(enc.formula, expand_symmetries(d), CheckMode::Resolution);
    CHECK(flat.valid);
}

} // namespace

TEST_CASE("single edge: exactly 6 resolution steps") {
    Graph g = make_path(2);
    Edge e = make_edge(1, 2);
    Derivation d = refute_cfi(g, e);
    CHECK(d.derives_bottom());
    CHECK(d.length() == 6);
    CHECK_FALSE(d.has_symmetry());
    CnfFormula f = encode_cfi_pair(g, e).formula;
    CHECK(check(f, d, CheckMode::Resolution).valid);
    CHECK(check(f, d, CheckMode::SrcI).valid);
}

TEST_CASE("paths exercise the tree case") {
    for (int n = 3; n <= 6; ++n) {
        Graph g = make_path(n);
        for (int i = 1; i < n; ++i) check_valid(g, make_edge(i, i + 1), false);
    }
}

TEST_CASE("cycles need one global symmetry step") {
    for (int n = 3; n <= 6; ++n) check_valid(make_cycle(n), make_edge(1, 2), true);
    check_valid(make_cycle(4), make_edge(3, 4), true);
}

TEST_CASE("cycle refutations are SRC-II-strict valid too") {
    Graph g = make_cycle(3);
    Edge e = make_edge(1, 2);
    Derivation d = refute_cfi(g, e);
    CnfFormula f = encode_cfi_pair(g, e).formula;
    CheckOptions strict;
    strict.strict = true;
    CHECK(check(f, d, CheckMode::SrcII, strict).valid);
}

TEST_CASE("dense and branching bases") {
    check_valid(make_complete(4), make_edge(2, 3), true);
    Graph star; // K_{1,3} plus a pendant: pure tree with a degree-3 hub
    star.n = 5;
    star.add_edge(1, 2);
    star.add_edge(1, 3);
    star.add_edge(1, 4);
    star.add_edge(4, 5);
    check_valid(star, make_edge(1, 3), false);

    Graph theta; // two vertices joined by three paths
    theta.n = 5;
    theta.add_edge(1, 3);
    theta.add_edge(3, 2);
    theta.add_edge(1, 4);
    theta.add_edge(4, 2);
    theta.add_edge(1, 5);
    theta.add_edge(5, 2);
    check_valid(theta, make_edge(1, 3), true);
}

TEST_CASE("component restriction ignores twist-free parts") {
    Graph g = make_path(2);
    g.n = 5;
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    Edge e = make_edge(1, 2);
    Derivation d = refute_cfi(g, e);
    CHECK(d.length() == 6); // only the twist component is touched
    CHECK(check(encode_cfi_pair(g, e).formula, d, CheckMode::SrcI).valid);
}

TEST_CASE("cycle automorphism stabilizes the formula") {
    Graph g = make_complete(3);
    CfiPairEncoding enc = encode_cfi_pair(g, make_edge(1, 2));
    Renaming sigma = cycle_automorphism(enc, {1, 2, 3});
    CHECK(sigma.stabilizes(enc.formula.clauses()));
    CHECK(sigma.then(sigma).is_identity());
    Edge e = make_edge(1, 2);
    CHECK(sigma(pos(VarKey::iso(enc.x.a(1, e), enc.x.a(1, e)))) ==
          pos(VarKey::iso(enc.x.b(1, e), enc.x.a(1, e))));
    CHECK_THROWS_WITH_AS(cycle_automorphism(enc, {1, 2}), doctest::Contains("NotACycle"),
                         Error);
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(refute_cfi(Graph{}, {1, 2}), doctest::Contains("NoEdge"), Error);
    CHECK_THROWS_AS(refute_cfi(make_path(3), make_edge(1, 3)), Error);
}

TEST_CASE("unsatisfiability cross-check on the base case") {
    CnfFormula f = encode_cfi_pair(make_path(2), make_edge(1, 2)).formula;
    CHECK_FALSE(satisfiable(f));
}
