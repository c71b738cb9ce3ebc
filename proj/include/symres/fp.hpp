#ifndef SYMRES_FP_HPP
#define SYMRES_FP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace symres {

// Exact arithmetic over F_p, p prime, residues 0..p-1.
// Instances are desk scale, so everything is dense and unsigned.

bool is_prime(unsigned p);
void check_modulus(unsigned p); // throws BadModulus unless p prime and < 2^16

unsigned fp_add(unsigned a, unsigned b, unsigned p);
unsigned fp_sub(unsigned a, unsigned b, unsigned p);
unsigned fp_mul(unsigned a, unsigned b, unsigned p);
unsigned fp_neg(unsigned a, unsigned p);
unsigned fp_inv(unsigned a, unsigned p);

class FpVector {
public:
    FpVector() = default;
    FpVector(unsigned p, std::size_t n);
    FpVector(unsigned p, std::vector<unsigned> entries);

    unsigned modulus() const { return p_; }
    std::size_t size() const { return v_.size(); }
    unsigned operator[](std::size_t i) const { return v_[i]; }
    unsigned& operator[](std::size_t i) { return v_[i]; }
    const std::vector<unsigned>& entries() const { return v_; }

    bool is_zero() const;
    FpVector operator+(const FpVector& o) const;
    FpVector operator-(const FpVector& o) const;
    FpVector scaled(unsigned k) const;
    unsigned dot(const FpVector& o) const;

    bool operator==(const FpVector& o) const = default;

private:
    unsigned p_ = 2;
    std::vector<unsigned> v_;
};

// Index set of nonzero coordinates, 1-based (matching equation indices).
std::vector<std::size_t> support(const FpVector& v);

// Zeroes every coordinate of r where v is zero.
FpVector restrict_to(const FpVector& r, const FpVector& v);

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

    unsigned modulus() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    unsigned& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    FpVector row(std::size_t i) const;
    void set_row(std::size_t i, const FpVector& r);

    FpVector mul(const FpVector& x) const;       // A x
    FpVector mul_left(const FpVector& v) const;  // v A
    FpMatrix transposed() const;

    bool operator==(const FpMatrix& o) const = default;

private:
    unsigned p_ = 2;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<unsigned> data_;
};

FpMatrix diag(const FpVector& r);
FpVector row_sum(const FpMatrix& a); // 1 * A

struct FpSolution {
    FpVector particular;
    std::vector<FpVector> kernel; // basis of ker(A)
};

// Gaussian elimination; nullopt means the system is inconsistent.
std::optional<FpSolution> solve(const FpMatrix& a, const FpVector& b);

// v with vA = 0 and v.b = 1; throws SystemConsistent if a solution exists.
FpVector inconsistency_certificate(const FpMatrix& a, const FpVector& b);

// span(U) <= span(W)?
bool subspace_leq(const std::vector<FpVector>& u, const std::vector<FpVector>& w,
                  unsigned p, std::size_t dim);

struct LinSystem {
    FpMatrix a;
    FpVector b;

    std::size_t width() const; // max row support size
};

LinSystem parse_lin_system(const std::string& text);
std::string emit_lin_system(const LinSystem& sys);

} // namespace symres

#endif
