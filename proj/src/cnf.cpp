#include "symres/cnf.hpp"
#include "symres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace symres {

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::contains_var(const VarKey& v) const {
    return contains(pos(v)) || contains(neg(v));
}

bool Clause::subset_of(const Clause& o) const {
    return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(), lits_.end());
}

bool Clause::tautological() const {
    for (const auto& l : lits_)
        if (l.positive && contains(l.complement())) return true;
    return false;
}

Clause Clause::with(const Literal& l) const {
    auto v = lits_;
    v.push_back(l);
    return Clause(std::move(v));
}

Clause Clause::without(const Literal& l) const {
    std::vector<Literal> v;
    v.reserve(lits_.size());
    for (const auto& x : lits_)
        if (x != l) v.push_back(x);
    return Clause(std::move(v));
}

Clause Clause::union_with(const Clause& o) const {
    std::vector<Literal> v;
    v.reserve(lits_.size() + o.lits_.size());
    std::merge(lits_.begin(), lits_.end(), o.lits_.begin(), o.lits_.end(),
               std::back_inserter(v));
    return Clause(std::move(v));
}

Clause resolve(const Clause& c1, const Clause& c2, const VarKey& pivot) {
    if (!c1.contains(pos(pivot)) || !c2.contains(neg(pivot)))
        fail("PivotAbsent", "pivot " + to_string(pivot) +
                                " must occur positively in c1 and negatively in c2");
    return c1.without(pos(pivot)).union_with(c2.without(neg(pivot)));
}

SymbolTable SymbolTable::from_keys(const std::set<VarKey>& keys) {
    SymbolTable t;
    int i = 1;
    for (const auto& k : keys) { // std::set iterates lexicographically
        t.to_index_.emplace(k, i++);
        t.keys_.push_back(k);
    }
    return t;
}

void SymbolTable::insert(const VarKey& key, int index) {
    if (index < 1) fail("LiteralOutOfRange", "symbol index must be positive");
    if (to_index_.count(key)) fail("NotBijective", "duplicate symbol key");
    if (static_cast<std::size_t>(index) > keys_.size()) keys_.resize(index);
    keys_[index - 1] = key;
    to_index_.emplace(key, index);
}

int SymbolTable::index(const VarKey& key) const {
    auto it = to_index_.find(key);
    if (it == to_index_.end()) fail("UnknownSymbol", "variable not in symbol table: " + to_string(key));
    return it->second;
}

bool SymbolTable::knows(const VarKey& key) const { return to_index_.count(key) > 0; }

const VarKey& SymbolTable::key(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > keys_.size())
        fail("LiteralOutOfRange", "variable index " + std::to_string(index) + " out of range");
    return keys_[index - 1];
}

CnfFormula::CnfFormula(std::set<Clause> clauses, SymbolTable symbols,
                       std::optional<unsigned> modulus)
    : clauses_(std::move(clauses)), symbols_(std::move(symbols)), modulus_(modulus) {
    for (const auto& c : clauses_)
        for (const auto& l : c)
            if (!symbols_.knows(l.var))
                fail("UnknownSymbol", "clause literal not registered: " + to_string(l.var));
}

CnfFormula CnfFormula::from_clauses(const std::set<Clause>& clauses,
                                    std::optional<unsigned> modulus) {
    std::set<VarKey> keys;
    for (const auto& c : clauses)
        for (const auto& l : c) keys.insert(l.var);
    return CnfFormula(clauses, SymbolTable::from_keys(keys), modulus);
}

bool CnfFormula::operator==(const CnfFormula& o) const {
    return clauses_ == o.clauses_ && symbols_ == o.symbols_ && modulus_ == o.modulus_;
}

Renaming Renaming::make(const std::vector<std::pair<Literal, Literal>>& pairs) {
    std::map<Literal, Literal> m;
    for (const auto& [from, to] : pairs) {
        for (auto [f, t] : {std::pair{from, to}, std::pair{from.complement(), to.complement()}}) {
            auto it = m.find(f);
            if (it != m.end()) {
                if (it->second != t)
                    fail("ComplementConflict",
                         "renaming maps " + to_string(f) + " to both " +
                             to_string(it->second) + " and " + to_string(t));
                continue;
            }
            m.emplace(f, t);
        }
    }
    std::set<Literal> targets;
    for (const auto& [f, t] : m)
        if (!targets.insert(t).second)
            fail("NotBijective", "two literals map to " + to_string(t));
    Renaming r;
    for (const auto& [f, t] : m)
        if (f != t) r.map_.emplace(f, t);
    return r;
}

Literal Renaming::operator()(const Literal& l) const {
    auto it = map_.find(l);
    return it == map_.end() ? l : it->second;
}

Clause Renaming::operator()(const Clause& c) const {
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& l : c) lits.push_back((*this)(l));
    return Clause(std::move(lits));
}

std::set<Clause> Renaming::operator()(const std::set<Clause>& cs) const {
    std::set<Clause> out;
    for (const auto& c : cs) out.insert((*this)(c));
    return out;
}

Renaming Renaming::inverse() const {
    Renaming r;
    for (const auto& [f, t] : map_) r.map_.emplace(t, f);
    return r;
}

Renaming Renaming::then(const Renaming& second) const {
    std::map<Literal, Literal> m;
    for (const auto& [f, t] : map_) m[f] = second(t);
    for (const auto& [f, t] : second.map_)
        if (!map_.count(f)) m[f] = t;
    Renaming r;
    for (const auto& [f, t] : m)
        if (f != t) r.map_.emplace(f, t);
    return r;
}

bool Renaming::stabilizes(const std::set<Clause>& clauses) const {
    // sigma is a bijection, so image inside the set forces set equality
    for (const auto& c : clauses)
        if (!clauses.count((*this)(c))) return false;
    return true;
}

std::vector<std::pair<Literal, Literal>> Renaming::positive_pairs() const {
    std::vector<std::pair<Literal, Literal>> out;
    for (const auto& [f, t] : map_)
        if (f.positive) out.emplace_back(f, t);
    return out;
}

CnfFormula apply_renaming(const Renaming& sigma, const CnfFormula& f) {
    return CnfFormula(sigma(f.clauses()), f.symbols(), f.modulus());
}

std::string to_string(const VarKey& v) {
    std::ostringstream s;
    switch (v.kind) {
    case VarKey::Kind::Raw: s << "v" << v.a; break;
    case VarKey::Kind::Xi: s << "xi(" << v.a << "," << v.b << ")"; break;
    case VarKey::Kind::Iso: s << "x(" << v.a << "," << v.b << ")"; break;
    }
    return s.str();
}

std::string to_string(const Literal& l) {
    return (l.positive ? "" : "~") + to_string(l.var);
}

std::string to_string(const Clause& c) {
    if (c.empty()) return "{}";
    std::string s = "{";
    for (const auto& l : c) s += to_string(l) + " ";
    s.back() = '}';
    return s;
}

std::string emit_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    if (f.modulus()) out << "c mod " << *f.modulus() << '\n';
    for (int i = 1; i <= f.symbols().size(); ++i) {
        const VarKey& k = f.symbols().key(i);
        switch (k.kind) {
        case VarKey::Kind::Raw: break; // raw variables need no symbol line
        case VarKey::Kind::Xi: out << "c sym " << i << " xi " << k.a << ' ' << k.b << '\n'; break;
        case VarKey::Kind::Iso: out << "c sym " << i << " iso " << k.a << ' ' << k.b << '\n'; break;
        }
    }
    out << "p cnf " << f.symbols().size() << ' ' << f.clauses().size() << '\n';
    for (const auto& c : f.clauses()) {
        std::vector<int> ids;
        for (const auto& l : c) ids.push_back(f.symbols().index(l.var) * (l.positive ? 1 : -1));
        std::sort(ids.begin(), ids.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
        for (int id : ids) out << id << ' ';
        out << "0\n";
    }
    return out.str();
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<unsigned> modulus;
    std::map<int, VarKey> sym;
    int nvars = -1;
    long long nclauses = -1;
    std::set<Clause> clauses;
    std::vector<Literal> cur;
    bool in_clause = false;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") {
            std::string tag;
            if (!(ls >> tag)) continue;
            if (tag == "mod") {
                unsigned p;
                if (!(ls >> p)) fail("MalformedHeader", "bad 'c mod' line");
                modulus = p;
            } else if (tag == "sym") {
                int idx;
                std::string kind;
                int a, b;
                if (!(ls >> idx >> kind >> a >> b)) fail("MalformedHeader", "bad 'c sym' line");
                if (kind == "xi") sym[idx] = VarKey::xi(a, b);
                else if (kind == "iso") sym[idx] = VarKey::iso(a, b);
                else fail("MalformedHeader", "unknown symbol kind '" + kind + "'");
            }
            continue;
        }
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt >> nvars >> nclauses) || fmt != "cnf" || nvars < 0 || nclauses < 0)
                fail("MalformedHeader", "bad 'p cnf' header");
            continue;
        }
        if (nvars < 0) fail("MalformedHeader", "clause data before 'p cnf' header");
        // clause data; first token already read
        std::istringstream rest(line);
        int lit;
        while (rest >> lit) {
            if (lit == 0) {
                clauses.insert(Clause(std::move(cur)));
                cur.clear();
                in_clause = false;
                continue;
            }
            int v = std::abs(lit);
            if (v > nvars)
                fail("LiteralOutOfRange", "literal " + std::to_string(lit) + " exceeds " +
                                              std::to_string(nvars) + " variables");
            VarKey key = sym.count(v) ? sym[v] : VarKey::raw(v);
            cur.push_back({key, lit > 0});
            in_clause = true;
        }
    }
    if (in_clause) fail("UnterminatedClause", "clause not terminated by 0");
    if (nvars < 0) fail("MalformedHeader", "missing 'p cnf' header");

    SymbolTable table;
    for (int i = 1; i <= nvars; ++i)
        table.insert(sym.count(i) ? sym[i] : VarKey::raw(i), i);
    return CnfFormula(std::move(clauses), std::move(table), modulus);
}

} // namespace symres
