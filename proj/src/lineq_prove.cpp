#include "symres/lineq_prove.hpp"
#include "symres/errors.hpp"

#include <algorithm>

namespace symres {

namespace {

// Chain-resolving engine shared by omega_refutation and sum_resolution.
// Walks all assignments y over theta; base(y) supplies (the id of a subset
// of) the clause that forbids y; V-clauses eliminate the theta variables
// one coordinate at a time.
struct Chain {
    DerivationBuilder& b;
    unsigned p;
    std::vector<std::size_t> theta;
    std::function<int(const std::map<std::size_t, unsigned>&)> base;
    std::function<int(std::size_t)> vclause;

    int run() {
        std::map<std::size_t, unsigned> y;
        return descend(0, y);
    }

    int descend(std::size_t depth, std::map<std::size_t, unsigned>& y) {
        if (depth == theta.size()) return base(y);
        std::size_t j = theta[depth];
        int cur = vclause(j);
        for (unsigned k = 0; k < p; ++k) {
            y[j] = k;
            int id = descend(depth + 1, y);
            cur = b.resolve_or_pass(cur, id,
                                    VarKey::xi(static_cast<int>(j), static_cast<int>(k)));
        }
        y.erase(j);
        return cur;
    }
};

std::vector<std::size_t> lv(const FpVector& x, const FpVector& y) {
    FpVector sum = x + y;
    std::vector<std::size_t> out;
    for (std::size_t i : support(x))
        if (sum[i - 1] == 0) out.push_back(i);
    for (std::size_t i : support(y))
        if (x[i - 1] == 0 && sum[i - 1] == 0) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

// Recovers x from c = C_a(x); validates c in F(a, b).
FpVector target_vector(const FpVector& a, unsigned b, const Clause& c) {
    unsigned p = a.modulus();
    FpVector x(p, a.size());
    for (const Literal& l : c) {
        bool ok = !l.positive && l.var.kind == VarKey::Kind::Xi && l.var.a >= 1 &&
                  static_cast<std::size_t>(l.var.a) <= a.size() && l.var.b >= 0 &&
                  static_cast<unsigned>(l.var.b) < p;
        if (!ok) fail("TargetNotInSum", "clause is not over the xi variables: " + to_string(c));
        x[static_cast<std::size_t>(l.var.a) - 1] = static_cast<unsigned>(l.var.b);
    }
    if (row_clause(a, x) != c || a.dot(x) == b % p)
        fail("TargetNotInSum", "clause is not in the sum encoding: " + to_string(c));
    return x;
}

int find_subset(const CnfFormula& f, const Clause& want, DerivationBuilder& b) {
    for (const Clause& c : f.clauses())
        if (c.subset_of(want)) return b.axiom(c);
    fail("MissingClause", "formula lacks a clause subsuming " + to_string(want));
}

} // namespace

Derivation omega_refutation(const CnfFormula& formula,
                            const std::vector<std::size_t>& theta) {
    unsigned p = formula.modulus().value_or(2);
    DerivationBuilder b;
    Chain chain{b, p, theta,
                [&](const std::map<std::size_t, unsigned>& y) {
                    std::vector<Literal> lits;
                    for (auto [i, k] : y)
                        lits.push_back(neg(VarKey::xi(static_cast<int>(i),
                                                      static_cast<int>(k))));
                    return find_subset(formula, Clause(std::move(lits)), b);
                },
                [&](std::size_t j) { return find_subset(formula, v_clause(j, p), b); }};
    chain.run();
    return b.take();
}

int sum_resolution(DerivationBuilder& b, const FpVector& a1, unsigned b1,
                   const FpVector& a2, unsigned b2, const Clause& target,
                   const ClauseProvider* first) {
    unsigned p = a1.modulus();
    FpVector sa = a1 + a2;
    unsigned sb = fp_add(b1 % p, b2 % p, p);
    FpVector x = target_vector(sa, sb, target);

    Chain chain{b, p, lv(a1, a2),
                [&](const std::map<std::size_t, unsigned>& yv) {
                    FpVector xy = x;
                    for (auto [i, k] : yv) xy[i - 1] = k;
                    // kappa = 1 when the first summand already forbids x+y
                    if (a1.dot(xy) != b1 % p) {
                        Clause want = row_clause(a1, xy);
                        return first ? (*first)(want) : b.axiom(want);
                    }
                    return b.axiom(row_clause(a2, xy));
                },
                [&](std::size_t j) { return b.axiom(v_clause(j, p)); }};
    return chain.run();
}

CaseSplit classify_case(const FpMatrix& a, const FpVector& b) {
    (void)b; // the dichotomy depends on the coefficient matrix only
    unsigned p = a.modulus();
    std::size_t m = a.rows(), n = a.cols();
    FpVector sa = row_sum(a);
    FpMatrix dsa = diag(sa);

    CaseSplit cs;
    cs.symmetric = true;
    if (m <= 1 || sa.is_zero()) return cs;

    FpMatrix sa_mat(p, 1, n);
    sa_mat.set_row(0, sa);
    auto ker_sa = solve(sa_mat, FpVector(p, 1))->kernel;
    auto ker_a = solve(a, FpVector(p, m))->kernel;

    std::vector<FpVector> u, w;
    for (const auto& k : ker_sa) u.push_back(dsa.mul(k));
    for (const auto& k : ker_a) w.push_back(dsa.mul(k));
    if (subspace_leq(u, w, p, n)) return cs;

    cs.symmetric = false;
    for (const auto& k : ker_sa)
        if (!subspace_leq({dsa.mul(k)}, w, p, n)) {
            cs.d = k;
            break;
        }

    // stacked system [A; diag(sA)] d' = [0; diag(sA) d] is inconsistent by
    // the choice of d; its certificate splits into (v, w)
    FpMatrix stack(p, m + n, n);
    FpVector rhs(p, m + n);
    for (std::size_t i = 0; i < m; ++i) stack.set_row(i, a.row(i));
    FpVector dsad = dsa.mul(cs.d);
    for (std::size_t i = 0; i < n; ++i) {
        stack.set_row(m + i, dsa.row(i));
        rhs[m + i] = dsad[i];
    }
    FpVector cert = inconsistency_certificate(stack, rhs);
    cs.v = FpVector(p, m);
    cs.w = FpVector(p, n);
    for (std::size_t i = 0; i < m; ++i) cs.v[i] = cert[i];
    for (std::size_t i = 0; i < n; ++i) cs.w[i] = cert[m + i];

    // most / second most common entry, smallest residue first on ties
    std::vector<std::size_t> freq(p, 0);
    for (std::size_t i = 0; i < m; ++i) ++freq[cs.v[i]];
    auto argmax = [&](unsigned skip) {
        unsigned best = skip == 0 ? 1 : 0;
        for (unsigned k = 0; k < p; ++k)
            if (k != skip && freq[k] > freq[best]) best = k;
        return best;
    };
    cs.k1 = argmax(p); // p is never a residue, so nothing is skipped
    cs.k2 = argmax(cs.k1);

    FpVector ones(p, std::vector<unsigned>(m, 1));
    cs.v1 = cs.v - ones.scaled(cs.k1);
    cs.v2 = ones.scaled(cs.k2) - cs.v;
    return cs;
}

namespace {

struct SumProver {
    DerivationBuilder& b;
    unsigned p;

    std::map<Clause, int> derive(std::vector<Row> rows, const std::set<Clause>& h) {
        std::map<Clause, int> out;
        // drop trivial rows; a 0 = c (c != 0) row makes bottom an axiom
        std::vector<Row> live;
        for (auto& r : rows) {
            if (r.first.is_zero() && r.second % p == 0) continue;
            if (r.first.is_zero()) {
                int id = b.axiom(Clause{});
                for (const Clause& c : h) out.emplace(c, id);
                return out;
            }
            live.push_back(std::move(r));
        }
        if (h.empty()) return out;
        std::size_t m = live.size();
        if (m == 0)
            fail("MissingPremise", "no equations left but clauses were requested");
        std::size_t n = live[0].first.size();

        FpVector sa(p, n);
        unsigned sb = 0;
        for (const auto& [row, rhs] : live) {
            sa = sa + row;
            sb = fp_add(sb, rhs % p, p);
        }
        std::map<Clause, FpVector> xs;
        for (const Clause& c : h) xs.emplace(c, target_vector(sa, sb, c));

        if (m == 1) { // F(sum) = F(a1, b1): everything is an axiom
            for (const Clause& c : h) out.emplace(c, b.axiom(c));
            return out;
        }

        FpMatrix a(p, m, n);
        FpVector bv(p, m);
        for (std::size_t i = 0; i < m; ++i) {
            a.set_row(i, live[i].first);
            bv[i] = live[i].second % p;
        }

        CaseSplit cs = classify_case(a, bv);
        if (sa.is_zero() || cs.symmetric) return symmetric_sum(live, a, sa, sb, h, xs);
        return composite(live, a, bv, sa, cs, h, xs);
    }

    std::map<Clause, int> symmetric_sum(const std::vector<Row>& live, const FpMatrix& a,
                                        const FpVector& sa, unsigned sb,
                                        const std::set<Clause>& h,
                                        const std::map<Clause, FpVector>& xs) {
        std::size_t m = live.size(), n = live[0].first.size();
        std::vector<Row> head(live.begin(), live.end() - 1);
        const Row& last = live.back();
        FpVector sa_head = sa - last.first;
        unsigned sb_head = fp_sub(sb, last.second % p, p);

        // generators: one clause per wrong value of sum A . x, via the
        // canonical z^k supported on the first support coordinate
        std::vector<std::pair<unsigned, Clause>> gens; // (k, C_sA(z^k))
        std::map<unsigned, FpVector> zs;
        if (sa.is_zero()) {
            gens.emplace_back(0, Clause{}); // F(0, sb) = { bottom }
            zs.emplace(0u, FpVector(p, n));
        } else {
            std::size_t j = support(sa)[0];
            for (unsigned k = 0; k < p; ++k) {
                if (k == sb) continue;
                FpVector z(p, n);
                z[j - 1] = fp_mul(k, fp_inv(sa[j - 1], p), p);
                gens.emplace_back(k, row_clause(sa, z));
                zs.emplace(k, z);
            }
        }

        // dry run to learn which first-summand clauses the replay will ask for
        std::set<Clause> h_head;
        {
            DerivationBuilder scratch;
            ClauseProvider record = [&](const Clause& want) {
                h_head.insert(want);
                return scratch.axiom(want);
            };
            for (const auto& [k, g] : gens)
                sum_resolution(scratch, sa_head, sb_head, last.first, last.second, g,
                               &record);
        }
        std::map<Clause, int> sub = derive(head, h_head);

        std::map<unsigned, int> gid;
        ClauseProvider lookup = [&](const Clause& want) { return sub.at(want); };
        for (const auto& [k, g] : gens)
            gid[k] = sum_resolution(b, sa_head, sb_head, last.first, last.second, g,
                                    &lookup);

        std::map<Clause, int> out;
        for (const Clause& c : h) {
            const FpVector& x = xs.at(c);
            unsigned k = sa.dot(x);
            if (row_clause(sa, zs.at(k)) == c) {
                out.emplace(c, gid.at(k));
                continue;
            }
            // translate the generator onto c with a kernel symmetry of the
            // whole system: [A; diag(sA)] d' = [0; diag(sA)(x - z^k)]
            FpVector d = x - zs.at(k);
            FpMatrix dsa = diag(sa);
            FpMatrix stack(p, m + n, n);
            FpVector rhs(p, m + n);
            for (std::size_t i = 0; i < m; ++i) stack.set_row(i, a.row(i));
            FpVector dsad = dsa.mul(d);
            for (std::size_t i = 0; i < n; ++i) {
                stack.set_row(m + i, dsa.row(i));
                rhs[m + i] = dsad[i];
            }
            auto sol = solve(stack, rhs);
            if (!sol)
                fail("InvariantViolation", "symmetric-sum case without a lifted symmetry");
            const FpVector& dp = sol->particular;
            if (!a.mul(dp).is_zero())
                fail("InvariantViolation", "lifted translation is not a system symmetry");
            out.emplace(c, b.symmetry(gid.at(k), translation_symmetry(dp), SymScope::Local));
        }
        return out;
    }

    std::map<Clause, int> composite(const std::vector<Row>& live, const FpMatrix& a,
                                    const FpVector& bv, const FpVector& sa,
                                    const CaseSplit& cs, const std::set<Clause>& h,
                                    const std::map<Clause, FpVector>& xs) {
        std::size_t m = live.size();
        FpVector va = a.mul_left(cs.v);
        if (va.dot(cs.d) == 0)
            fail("InvariantViolation", "composite witness fails vAd != 0");
        for (std::size_t i : support(va))
            if (sa[i - 1] == 0)
                fail("InvariantViolation", "supp(vA) exceeds supp(sum A)");
        for (unsigned al = 0; al < p; ++al)
            if (sa == va.scaled(al))
                fail("InvariantViolation", "vA and sum A are linearly dependent");
        FpVector v1a = a.mul_left(cs.v1), v2a = a.mul_left(cs.v2);
        if (!lv(v1a, v2a).empty())
            fail("InvariantViolation", "composite split has vanishing coordinates");

        unsigned v1b = cs.v1.dot(bv), v2b = cs.v2.dot(bv);
        std::set<Clause> h1, h2;
        std::map<Clause, std::pair<int, Clause>> route;
        for (const Clause& c : h) {
            const FpVector& x = xs.at(c);
            if (v1a.dot(x) != v1b) {
                Clause e = row_clause(v1a, x);
                h1.insert(e);
                route.emplace(c, std::make_pair(1, e));
            } else if (v2a.dot(x) != v2b) {
                Clause e = row_clause(v2a, x);
                h2.insert(e);
                route.emplace(c, std::make_pair(2, e));
            } else {
                fail("InvariantViolation", "target escapes both composite parts");
            }
        }

        auto scaled_rows = [&](const FpVector& w) {
            std::vector<Row> rs;
            for (std::size_t i = 0; i < m; ++i)
                rs.emplace_back(live[i].first.scaled(w[i]),
                                fp_mul(live[i].second % p, w[i], p));
            return rs;
        };
        std::map<Clause, int> sub1 = derive(scaled_rows(cs.v1), h1);
        std::map<Clause, int> sub2 = derive(scaled_rows(cs.v2), h2);

        std::map<Clause, int> out;
        for (const auto& [c, r] : route)
            out.emplace(c, (r.first == 1 ? sub1 : sub2).at(r.second));
        return out;
    }
};

} // namespace

std::map<Clause, int> derive_sum_clauses(DerivationBuilder& b,
                                         const std::vector<Row>& rows,
                                         const std::set<Clause>& h) {
    if (rows.empty() && h.empty()) return {};
    unsigned p = rows.empty() ? 2 : rows[0].first.modulus();
    SumProver prover{b, p};
    return prover.derive(rows, h);
}

Derivation refute_system(const FpMatrix& a, const FpVector& b) {
    check_modulus(a.modulus());
    FpVector v = inconsistency_certificate(a, b); // throws SystemConsistent
    std::vector<Row> rows;
    for (std::size_t i = 0; i < a.rows(); ++i)
        rows.emplace_back(a.row(i).scaled(v[i]), fp_mul(b[i], v[i], a.modulus()));
    DerivationBuilder builder;
    derive_sum_clauses(builder, rows, {Clause{}});
    return builder.take();
}

} // namespace symres
