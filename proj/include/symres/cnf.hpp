#ifndef SYMRES_CNF_HPP
#define SYMRES_CNF_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symres {

// Structured variable identity. Xi(i,k) is the "coordinate i holds field
// element k" variable of a linear-equation encoding; Iso(u,v) is the
// "vertex u maps to vertex v" variable of an isomorphism encoding.
struct VarKey {
    enum class Kind : std::uint8_t { Raw = 0, Xi = 1, Iso = 2 };

    Kind kind = Kind::Raw;
    int a = 0;
    int b = 0;

    static VarKey raw(int n) { return {Kind::Raw, n, 0}; }
    static VarKey xi(int i, int k) { return {Kind::Xi, i, k}; }
    static VarKey iso(int u, int v) { return {Kind::Iso, u, v}; }

    auto operator<=>(const VarKey&) const = default;
};

struct Literal {
    VarKey var;
    bool positive = true;

    Literal complement() const { return {var, !positive}; }

    auto operator<=>(const Literal&) const = default;
};

inline Literal pos(VarKey v) { return {v, true}; }
inline Literal neg(VarKey v) { return {v, false}; }

// A clause is a set of literals; representation is sorted and duplicate-free,
// so equality is order-insensitive by construction.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> lits);

    bool empty() const { return lits_.empty(); }
    std::size_t size() const { return lits_.size(); }
    bool contains(const Literal& l) const;
    bool contains_var(const VarKey& v) const;
    bool subset_of(const Clause& o) const;
    bool tautological() const;

    Clause with(const Literal& l) const;
    Clause without(const Literal& l) const;
    Clause union_with(const Clause& o) const;

    const std::vector<Literal>& literals() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    auto operator<=>(const Clause&) const = default;

private:
    std::vector<Literal> lits_;
};

// The resolution rule: (c1 \ {pivot}) u (c2 \ {~pivot}). Requires pivot
// positive in c1 and negative in c2; other complementary pairs survive.
Clause resolve(const Clause& c1, const Clause& c2, const VarKey& pivot);

// Bijection VarKey <-> 1..N. When built from a key set the assignment is
// lexicographic on the structured keys, so DIMACS output is deterministic.
class SymbolTable {
public:
    SymbolTable() = default;
    static SymbolTable from_keys(const std::set<VarKey>& keys);

    void insert(const VarKey& key, int index); // for parsers
    int index(const VarKey& key) const;
    bool knows(const VarKey& key) const;
    const VarKey& key(int index) const;
    int size() const { return static_cast<int>(keys_.size()); }

    bool operator==(const SymbolTable& o) const { return keys_ == o.keys_; }

private:
    std::map<VarKey, int> to_index_;
    std::vector<VarKey> keys_; // keys_[i-1] is variable i
};

class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(std::set<Clause> clauses, SymbolTable symbols,
               std::optional<unsigned> modulus = std::nullopt);

    // Builds the symbol table lexicographically from the clauses' variables.
    static CnfFormula from_clauses(const std::set<Clause>& clauses,
                                   std::optional<unsigned> modulus = std::nullopt);

    const std::set<Clause>& clauses() const { return clauses_; }
    const SymbolTable& symbols() const { return symbols_; }
    std::optional<unsigned> modulus() const { return modulus_; }
    bool contains(const Clause& c) const { return clauses_.count(c) > 0; }

    bool operator==(const CnfFormula& o) const;

private:
    std::set<Clause> clauses_;
    SymbolTable symbols_;
    std::optional<unsigned> modulus_;
};

// A complementation-respecting literal bijection, stored sparsely
// (fixed points omitted). The domain is closed under complement.
class Renaming {
public:
    Renaming() = default;

    // Closes the pairs under complementation and validates bijectivity.
    // Throws ComplementConflict / NotBijective.
    static Renaming make(const std::vector<std::pair<Literal, Literal>>& pairs);

    Literal operator()(const Literal& l) const;
    Clause operator()(const Clause& c) const;
    std::set<Clause> operator()(const std::set<Clause>& cs) const;

    Renaming inverse() const;
    Renaming then(const Renaming& second) const; // apply *this, then second

    bool is_identity() const { return map_.empty(); }
    bool stabilizes(const std::set<Clause>& clauses) const; // sigma(F) == F

    // Non-fixed mappings with positive source literal, sorted.
    std::vector<std::pair<Literal, Literal>> positive_pairs() const;

    bool operator==(const Renaming& o) const { return map_ == o.map_; }

private:
    std::map<Literal, Literal> map_;
};

CnfFormula apply_renaming(const Renaming& sigma, const CnfFormula& f);

// DIMACS with a symbol-table in comments:
//   c mod <p>              (present when F_p variables exist)
//   c sym <int> xi <i> <k>
//   c sym <int> iso <u> <v>
std::string emit_dimacs(const CnfFormula& f);
CnfFormula parse_dimacs(const std::string& text);

std::string to_string(const VarKey& v);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);

} // namespace symres

#endif
