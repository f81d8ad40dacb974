#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace qgk {

// Exact linear algebra over F_p for small primes (p in {2,3,5,7}).
// Pivoting is deterministic (first nonzero in column order), so ranks,
// kernels and solve() outputs are reproducible across runs and platforms.
// p = 2 uses machine-word bitsets internally; other p use byte arrays.

bool is_supported_prime(unsigned p);

uint8_t fp_reduce(uint8_t p, long long a);
uint8_t fp_add(uint8_t p, uint8_t a, uint8_t b);
uint8_t fp_sub(uint8_t p, uint8_t a, uint8_t b);
uint8_t fp_mul(uint8_t p, uint8_t a, uint8_t b);
uint8_t fp_neg(uint8_t p, uint8_t a);
uint8_t fp_inv(uint8_t p, uint8_t a);

// base^exp if it stays <= limit, otherwise nullopt.
std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp,
                                       std::size_t limit);

struct FpVec {
    uint8_t p = 2;
    std::vector<uint8_t> coords;  // each in [0,p)

    FpVec() = default;
    FpVec(uint8_t p_, std::size_t dim) : p(p_), coords(dim, 0) {}
    FpVec(uint8_t p_, std::initializer_list<int> vals);

    std::size_t dim() const { return coords.size(); }
    uint8_t operator[](std::size_t i) const { return coords[i]; }
    void set(std::size_t i, long long v);
    bool is_zero() const;

    bool operator==(const FpVec&) const = default;
};

FpVec operator+(const FpVec& a, const FpVec& b);
FpVec operator-(const FpVec& a, const FpVec& b);
FpVec operator-(const FpVec& a);
FpVec scaled(uint8_t c, const FpVec& a);
void add_scaled(FpVec& acc, uint8_t c, const FpVec& a);  // acc += c*a
bool lex_less(const FpVec& a, const FpVec& b);

// Enumeration of F_p^dim in lexicographic order, coordinate 0 most
// significant: index 0 is the zero vector, index p^dim - 1 is all p-1.
FpVec vec_from_index(uint8_t p, std::size_t dim, std::size_t index);
std::size_t index_of_vec(const FpVec& v);
// Odometer step to the lexicographic successor; false on wrap to zero.
bool next_vec(FpVec& v);

struct FpMat {
    uint8_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<uint8_t> a;  // row-major, entries in [0,p)

    FpMat() = default;
    FpMat(uint8_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}

    uint8_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    void set(std::size_t r, std::size_t c, long long v);

    static FpMat identity(uint8_t p, std::size_t n);
    static FpMat from_columns(uint8_t p, std::size_t dim,
                              const std::vector<FpVec>& cols);
    static FpMat from_rows(uint8_t p, std::size_t dim,
                           const std::vector<FpVec>& rows);

    FpVec row(std::size_t r) const;
    FpVec col(std::size_t c) const;

    bool operator==(const FpMat&) const = default;
};

FpVec mul(const FpMat& A, const FpVec& x);
FpMat mul(const FpMat& A, const FpMat& B);
FpMat transpose(const FpMat& A);
FpMat vstack(const FpMat& A, const FpMat& B);

std::size_t rank(const FpMat& A);

// Some x with A*x = b, or nullopt if the system is inconsistent. The
// returned solution sets all free variables to zero under the fixed
// pivot order, so it is unique for a given (A, b).
std::optional<FpVec> solve(const FpMat& A, const FpVec& b);

// Deterministic basis of {x : A*x = 0}; size = cols - rank(A).
std::vector<FpVec> kernel_basis(const FpMat& A);

// A point of (c1 + span S1) ∩ (c2 + span S2), absent when the cosets are
// disjoint. All vectors must share p and dimension.
std::optional<FpVec> affine_intersect(const FpVec& c1,
                                      const std::vector<FpVec>& S1,
                                      const FpVec& c2,
                                      const std::vector<FpVec>& S2);

// Incremental reduced-row-echelon accumulator for span computations.
// The represented subspace depends only on the set of inserted vectors,
// never on insertion order; basis() is the canonical RREF basis.
class RrefBasis {
public:
    RrefBasis(uint8_t p, std::size_t dim);

    bool insert(const FpVec& v);  // true if the span grew
    bool contains(const FpVec& v) const;
    std::size_t dim_span() const { return pivots_.size(); }
    std::size_t ambient_dim() const { return dim_; }
    std::vector<FpVec> basis() const;

private:
    uint8_t p_;
    std::size_t dim_, words_;
    // p = 2: bit-packed rows; p odd: byte rows. Rows kept sorted by pivot.
    std::vector<std::vector<uint64_t>> bit_rows_;
    std::vector<std::vector<uint8_t>> byte_rows_;
    std::vector<std::size_t> pivots_;

    void reduce_bits(std::vector<uint64_t>& row) const;
    void reduce_bytes(std::vector<uint8_t>& row) const;
};

}  // namespace qgk
