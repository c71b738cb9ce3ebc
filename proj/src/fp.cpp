#include "symres/fp.hpp"
#include "symres/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace symres {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_modulus(unsigned p) {
    if (p >= (1u << 16)) fail("BadModulus", "modulus " + std::to_string(p) + " too large");
    if (!is_prime(p)) fail("BadModulus", "modulus " + std::to_string(p) + " is not prime");
}

unsigned fp_add(unsigned a, unsigned b, unsigned p) { return (a + b) % p; }
unsigned fp_sub(unsigned a, unsigned b, unsigned p) { return (a + p - b % p) % p; }
unsigned fp_mul(unsigned a, unsigned b, unsigned p) { return (a * b) % p; }
unsigned fp_neg(unsigned a, unsigned p) { return (p - a % p) % p; }

unsigned fp_inv(unsigned a, unsigned p) {
    a %= p;
    if (a == 0) fail("DivisionByZero", "no inverse of 0 mod " + std::to_string(p));
    // extended euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return static_cast<unsigned>((t % p + p) % p);
}

FpVector::FpVector(unsigned p, std::size_t n) : p_(p), v_(n, 0) { check_modulus(p); }

FpVector::FpVector(unsigned p, std::vector<unsigned> entries) : p_(p), v_(std::move(entries)) {
    check_modulus(p);
    for (auto& e : v_) e %= p_;
}

bool FpVector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](unsigned e) { return e == 0; });
}

FpVector FpVector::operator+(const FpVector& o) const {
    if (o.size() != size() || o.modulus() != p_) fail("DimensionMismatch", "vector add");
    FpVector r(p_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = fp_add(v_[i], o[i], p_);
    return r;
}

FpVector FpVector::operator-(const FpVector& o) const {
    if (o.size() != size() || o.modulus() != p_) fail("DimensionMismatch", "vector sub");
    FpVector r(p_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = fp_sub(v_[i], o[i], p_);
    return r;
}

FpVector FpVector::scaled(unsigned k) const {
    FpVector r(p_, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = fp_mul(v_[i], k % p_, p_);
    return r;
}

unsigned FpVector::dot(const FpVector& o) const {
    if (o.size() != size() || o.modulus() != p_) fail("DimensionMismatch", "dot product");
    unsigned acc = 0;
    for (std::size_t i = 0; i < size(); ++i) acc = fp_add(acc, fp_mul(v_[i], o[i], p_), p_);
    return acc;
}

std::vector<std::size_t> support(const FpVector& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.push_back(i + 1);
    return s;
}

FpVector restrict_to(const FpVector& r, const FpVector& v) {
    if (r.size() != v.size()) fail("DimensionMismatch", "restriction");
    FpVector out(r.modulus(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = v[i] != 0 ? r[i] : 0;
    return out;
}

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(p);
}

FpVector FpMatrix::row(std::size_t i) const {
    FpVector r(p_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void FpMatrix::set_row(std::size_t i, const FpVector& r) {
    if (r.size() != cols_) fail("DimensionMismatch", "set_row");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

FpVector FpMatrix::mul(const FpVector& x) const {
    if (x.size() != cols_) fail("DimensionMismatch", "matrix-vector product");
    FpVector r(p_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = fp_add(acc, fp_mul(at(i, j), x[j], p_), p_);
        r[i] = acc;
    }
    return r;
}

FpVector FpMatrix::mul_left(const FpVector& v) const {
    if (v.size() != rows_) fail("DimensionMismatch", "vector-matrix product");
    FpVector r(p_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < rows_; ++i) acc = fp_add(acc, fp_mul(v[i], at(i, j), p_), p_);
        r[j] = acc;
    }
    return r;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

FpMatrix diag(const FpVector& r) {
    FpMatrix d(r.modulus(), r.size(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i) d.at(i, i) = r[i];
    return d;
}

FpVector row_sum(const FpMatrix& a) {
    FpVector s(a.modulus(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) s = s + a.row(i);
    return s;
}

namespace {

// Row-reduces [A | b] while tracking the row operations in T (T A = reduced A).
struct Elimination {
    FpMatrix a;  // reduced
    FpVector b;  // reduced rhs
    FpMatrix t;  // ops, t * original = reduced
    std::vector<std::size_t> pivot_col; // per reduced row until rank, then unused
    std::size_t rank = 0;
};

Elimination eliminate(const FpMatrix& a0, const FpVector& b0) {
    unsigned p = a0.modulus();
    std::size_t m = a0.rows(), n = a0.cols();
    if (b0.size() != m) fail("DimensionMismatch", "system dims disagree");
    Elimination e{a0, b0, FpMatrix(p, m, m), {}, 0};
    for (std::size_t i = 0; i < m; ++i) e.t.at(i, i) = 1;

    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (e.a.at(i, c) != 0) { piv = i; break; }
        if (piv == m) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(e.a.at(piv, j), e.a.at(r, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(e.t.at(piv, j), e.t.at(r, j));
            std::swap(e.b[piv], e.b[r]);
        }
        unsigned inv = fp_inv(e.a.at(r, c), p);
        for (std::size_t j = 0; j < n; ++j) e.a.at(r, j) = fp_mul(e.a.at(r, j), inv, p);
        for (std::size_t j = 0; j < m; ++j) e.t.at(r, j) = fp_mul(e.t.at(r, j), inv, p);
        e.b[r] = fp_mul(e.b[r], inv, p);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || e.a.at(i, c) == 0) continue;
            unsigned f = e.a.at(i, c);
            for (std::size_t j = 0; j < n; ++j)
                e.a.at(i, j) = fp_sub(e.a.at(i, j), fp_mul(f, e.a.at(r, j), p), p);
            for (std::size_t j = 0; j < m; ++j)
                e.t.at(i, j) = fp_sub(e.t.at(i, j), fp_mul(f, e.t.at(r, j), p), p);
            e.b[i] = fp_sub(e.b[i], fp_mul(f, e.b[r], p), p);
        }
        e.pivot_col.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

std::optional<FpSolution> solve(const FpMatrix& a, const FpVector& b) {
    unsigned p = a.modulus();
    std::size_t n = a.cols();
    Elimination e = eliminate(a, b);
    for (std::size_t i = e.rank; i < a.rows(); ++i)
        if (e.b[i] != 0) return std::nullopt;

    FpSolution sol{FpVector(p, n), {}};
    for (std::size_t r = 0; r < e.rank; ++r) sol.particular[e.pivot_col[r]] = e.b[r];

    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        FpVector k(p, n);
        k[c] = 1;
        for (std::size_t r = 0; r < e.rank; ++r)
            k[e.pivot_col[r]] = fp_neg(e.a.at(r, c), p);
        sol.kernel.push_back(std::move(k));
    }
    assert(a.mul(sol.particular) == b);
    return sol;
}

FpVector inconsistency_certificate(const FpMatrix& a, const FpVector& b) {
    unsigned p = a.modulus();
    Elimination e = eliminate(a, b);
    for (std::size_t i = e.rank; i < a.rows(); ++i) {
        if (e.b[i] == 0) continue;
        FpVector v = e.t.row(i).scaled(fp_inv(e.b[i], p));
        if (!a.mul_left(v).is_zero() || v.dot(b) != 1)
            fail("InternalError", "certificate verification failed");
        return v;
    }
    fail("SystemConsistent", "system consistent");
}

bool subspace_leq(const std::vector<FpVector>& u, const std::vector<FpVector>& w,
                  unsigned p, std::size_t dim) {
    // each u basis vector must be solvable as a combination of w
    FpMatrix wt(p, dim, w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].size() != dim) fail("DimensionMismatch", "subspace_leq");
        for (std::size_t i = 0; i < dim; ++i) wt.at(i, j) = w[j][i];
    }
    for (const auto& uv : u) {
        if (uv.size() != dim) fail("DimensionMismatch", "subspace_leq");
        if (!solve(wt, uv)) return false;
    }
    return true;
}

std::size_t LinSystem::width() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) w = std::max(w, support(a.row(i)).size());
    return w;
}

LinSystem parse_lin_system(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    unsigned p;
    std::size_t m, n;
    if (!(in >> tag >> p >> m >> n) || tag != "lin")
        fail("MalformedHeader", "expected 'lin <p> <m> <n>'");
    check_modulus(p);
    LinSystem sys{FpMatrix(p, m, n), FpVector(p, m)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long long v;
            if (!(in >> v)) fail("MalformedHeader", "truncated coefficient row");
            sys.a.at(i, j) = static_cast<unsigned>(((v % p) + p) % p);
        }
        std::string bar;
        long long bv;
        if (!(in >> bar >> bv) || bar != "|") fail("MalformedHeader", "expected '| b'");
        sys.b[i] = static_cast<unsigned>(((bv % p) + p) % p);
    }
    return sys;
}

std::string emit_lin_system(const LinSystem& sys) {
    std::ostringstream out;
    out << "lin " << sys.a.modulus() << ' ' << sys.a.rows() << ' ' << sys.a.cols() << '\n';
    for (std::size_t i = 0; i < sys.a.rows(); ++i) {
        for (std::size_t j = 0; j < sys.a.cols(); ++j) out << sys.a.at(i, j) << ' ';
        out << "| " << sys.b[i] << '\n';
    }
    return out.str();
}

} // namespace symres
