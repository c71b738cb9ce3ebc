#include "symres/lineq.hpp"
#include "symres/errors.hpp"

namespace symres {

Clause row_clause(const FpVector& a, const FpVector& x) {
    std::vector<Literal> lits;
    for (std::size_t i : support(a))
        lits.push_back(neg(VarKey::xi(static_cast<int>(i), static_cast<int>(x[i - 1]))));
    return Clause(std::move(lits));
}

Clause v_clause(std::size_t i, unsigned p) {
    std::vector<Literal> lits;
    for (unsigned k = 0; k < p; ++k)
        lits.push_back(pos(VarKey::xi(static_cast<int>(i), static_cast<int>(k))));
    return Clause(std::move(lits));
}

RowEncoding encode_row(const FpVector& a, unsigned b) {
    unsigned p = a.modulus();
    check_modulus(p);
    RowEncoding enc{a, b % p, {}};
    std::vector<std::size_t> supp = support(a);
    // enumerate x with supp(x) <= supp(a) by odometer over supp(a)
    FpVector x(p, a.size());
    std::vector<unsigned> digits(supp.size(), 0);
    while (true) {
        for (std::size_t t = 0; t < supp.size(); ++t) x[supp[t] - 1] = digits[t];
        if (a.dot(x) != enc.b) enc.clauses.insert(row_clause(a, x));
        std::size_t t = 0;
        for (; t < supp.size(); ++t) {
            if (++digits[t] < p) break;
            digits[t] = 0;
        }
        if (t == supp.size()) break;
    }
    return enc;
}

std::set<Clause> encode_rows(const FpMatrix& a, const FpVector& b) {
    std::set<Clause> cs;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto enc = encode_row(a.row(i), b[i]);
        cs.insert(enc.clauses.begin(), enc.clauses.end());
    }
    return cs;
}

CnfFormula encode_system(const FpMatrix& a, const FpVector& b) {
    unsigned p = a.modulus();
    check_modulus(p);
    std::set<Clause> cs = encode_rows(a, b);
    for (std::size_t i = 1; i <= a.cols(); ++i) cs.insert(v_clause(i, p));
    return CnfFormula::from_clauses(cs, p);
}

Renaming translation_symmetry(const FpVector& d) {
    unsigned p = d.modulus();
    std::vector<std::pair<Literal, Literal>> pairs;
    for (std::size_t i : support(d))
        for (unsigned k = 0; k < p; ++k)
            pairs.emplace_back(pos(VarKey::xi(static_cast<int>(i), static_cast<int>(k))),
                               pos(VarKey::xi(static_cast<int>(i),
                                              static_cast<int>(fp_add(k, d[i - 1], p)))));
    return Renaming::make(pairs);
}

} // namespace symres
