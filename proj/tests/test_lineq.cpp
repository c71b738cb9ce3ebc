#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symres/errors.hpp"
#include "symres/lineq.hpp"
#include "symres/oracle.hpp"

using namespace symres;

namespace {

// every vector over F_p of the given length
std::vector<FpVector> all_vectors(unsigned p, std::size_t n) {
    std::vector<FpVector> out;
    std::vector<unsigned> v(n, 0);
    while (true) {
        out.push_back(FpVector(p, v));
        std::size_t i = 0;
        while (i < n && ++v[i] == p) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

bool solvable(const FpMatrix& a, const FpVector& b) { return solve(a, b).has_value(); }

} // namespace

TEST_CASE("row encoding examples") {
    // x1 + x2 = 1 over F_2: forbidden x in {(0,0),(1,1)}
    auto enc = encode_row(FpVector(2, {1, 1}), 1);
    CHECK(enc.clauses.size() == 2);
    CHECK(enc.clauses.count(Clause{{neg(VarKey::xi(1, 0)), neg(VarKey::xi(2, 0))}}));
    CHECK(enc.clauses.count(Clause{{neg(VarKey::xi(1, 1)), neg(VarKey::xi(2, 1))}}));

    // 2x1 + x2 = 0 over F_3: 9 assignments on the support, 3 satisfy it
    auto enc3 = encode_row(FpVector(3, {2, 1}), 0);
    CHECK(enc3.clauses.size() == 6);
    CHECK(enc3.clauses.count(Clause{{neg(VarKey::xi(1, 1)), neg(VarKey::xi(2, 0))}}));
    CHECK_FALSE(enc3.clauses.count(Clause{{neg(VarKey::xi(1, 1)), neg(VarKey::xi(2, 1))}}));

    // degenerate rows
    CHECK(encode_row(FpVector(3, 2), 0).clauses.empty());
    auto bad = encode_row(FpVector(3, 2), 1);
    CHECK(bad.clauses.size() == 1);
    CHECK(bad.clauses.begin()->empty());
}

TEST_CASE("scaling invariance") {
    for (unsigned p : {3u, 5u}) {
        FpVector a(p, {1, 2, 0});
        for (unsigned k = 1; k < p; ++k)
            for (unsigned b = 0; b < p; ++b)
                CHECK(encode_row(a.scaled(k), fp_mul(k, b, p)).clauses ==
                      encode_row(a, b).clauses);
    }
}

TEST_CASE("solvability matches satisfiability exhaustively (p=2, n,m <= 3)") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t m = 1; m <= 3; ++m) {
            // enumerate all m x (n+1) augmented systems via m row indices
            auto rows = all_vectors(2, n + 1);
            std::vector<std::size_t> pick(m, 0);
            while (true) {
                FpMatrix a(2, m, n);
                FpVector b(2, m);
                for (std::size_t i = 0; i < m; ++i) {
                    const FpVector& r = rows[pick[i]];
                    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = r[j];
                    b[i] = r[n];
                }
                CHECK(solvable(a, b) == satisfiable(encode_system(a, b)));
                std::size_t i = 0;
                while (i < m && ++pick[i] == rows.size()) pick[i++] = 0;
                if (i == m) break;
            }
        }
}

TEST_CASE("translation symmetry stabilizes F(a,b) iff a.d = 0 (exhaustive)") {
    for (unsigned p : {2u, 3u})
        for (std::size_t n = 1; n <= 3; ++n)
            for (const FpVector& a : all_vectors(p, n)) {
                if (support(a).empty()) continue;
                for (unsigned b = 0; b < p; ++b) {
                    auto f = encode_row(a, b).clauses;
                    for (const FpVector& d : all_vectors(p, n)) {
                        Renaming sigma = translation_symmetry(d);
                        CHECK(sigma.stabilizes(f) == (a.dot(d) == 0));
                    }
                }
            }
}

TEST_CASE("V clauses and full system encoding") {
    FpMatrix a(3, 1, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    FpVector b(3, {2});
    CnfFormula f = encode_system(a, b);
    CHECK(f.modulus() == 3u);
    CHECK(f.contains(v_clause(1, 3)));
    CHECK(f.contains(v_clause(2, 3)));
    // 6 row clauses + 2 V clauses
    CHECK(f.clauses().size() == 8);
    CHECK(satisfiable(f));
}
