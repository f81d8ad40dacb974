#include "qgk/fpla.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgk {

bool is_supported_prime(unsigned p) {
    return p == 2 || p == 3 || p == 5 || p == 7;
}

static void require_prime(uint8_t p) {
    if (!is_supported_prime(p))
        throw std::invalid_argument("unsupported prime " + std::to_string(p));
}

uint8_t fp_reduce(uint8_t p, long long a) {
    long long r = a % p;
    if (r < 0) r += p;
    return static_cast<uint8_t>(r);
}

uint8_t fp_add(uint8_t p, uint8_t a, uint8_t b) {
    uint8_t s = static_cast<uint8_t>(a + b);
    return s >= p ? static_cast<uint8_t>(s - p) : s;
}

uint8_t fp_sub(uint8_t p, uint8_t a, uint8_t b) {
    return a >= b ? static_cast<uint8_t>(a - b)
                  : static_cast<uint8_t>(a + p - b);
}

uint8_t fp_mul(uint8_t p, uint8_t a, uint8_t b) {
    return static_cast<uint8_t>((a * b) % p);
}

uint8_t fp_neg(uint8_t p, uint8_t a) {
    return a == 0 ? 0 : static_cast<uint8_t>(p - a);
}

uint8_t fp_inv(uint8_t p, uint8_t a) {
    if (a == 0) throw std::invalid_argument("fp_inv of zero");
    for (uint8_t x = 1; x < p; ++x)
        if (fp_mul(p, a, x) == 1) return x;
    throw std::invalid_argument("fp_inv: modulus not prime");
}

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp,
                                       std::size_t limit) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base) return std::nullopt;
        r *= base;
        if (r > limit) return std::nullopt;
    }
    return r;
}

FpVec::FpVec(uint8_t p_, std::initializer_list<int> vals) : p(p_) {
    require_prime(p_);
    coords.reserve(vals.size());
    for (int v : vals) coords.push_back(fp_reduce(p_, v));
}

void FpVec::set(std::size_t i, long long v) { coords[i] = fp_reduce(p, v); }

bool FpVec::is_zero() const {
    return std::all_of(coords.begin(), coords.end(),
                       [](uint8_t c) { return c == 0; });
}

static void require_same(const FpVec& a, const FpVec& b) {
    if (a.p != b.p || a.dim() != b.dim())
        throw std::invalid_argument("FpVec dimension/prime mismatch");
}

FpVec operator+(const FpVec& a, const FpVec& b) {
    require_same(a, b);
    FpVec r(a.p, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r.coords[i] = fp_add(a.p, a.coords[i], b.coords[i]);
    return r;
}

FpVec operator-(const FpVec& a, const FpVec& b) {
    require_same(a, b);
    FpVec r(a.p, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r.coords[i] = fp_sub(a.p, a.coords[i], b.coords[i]);
    return r;
}

FpVec operator-(const FpVec& a) {
    FpVec r(a.p, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r.coords[i] = fp_neg(a.p, a.coords[i]);
    return r;
}

FpVec scaled(uint8_t c, const FpVec& a) {
    FpVec r(a.p, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        r.coords[i] = fp_mul(a.p, c, a.coords[i]);
    return r;
}

void add_scaled(FpVec& acc, uint8_t c, const FpVec& a) {
    require_same(acc, a);
    if (c == 0) return;
    for (std::size_t i = 0; i < a.dim(); ++i)
        acc.coords[i] = fp_add(a.p, acc.coords[i], fp_mul(a.p, c, a.coords[i]));
}

bool lex_less(const FpVec& a, const FpVec& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(),
                                        b.coords.begin(), b.coords.end());
}

FpVec vec_from_index(uint8_t p, std::size_t dim, std::size_t index) {
    FpVec v(p, dim);
    for (std::size_t i = dim; i-- > 0;) {
        v.coords[i] = static_cast<uint8_t>(index % p);
        index /= p;
    }
    return v;
}

std::size_t index_of_vec(const FpVec& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) idx = idx * v.p + v.coords[i];
    return idx;
}

bool next_vec(FpVec& v) {
    for (std::size_t i = v.dim(); i-- > 0;) {
        if (v.coords[i] + 1 < v.p) {
            ++v.coords[i];
            return true;
        }
        v.coords[i] = 0;
    }
    return false;
}

void FpMat::set(std::size_t r, std::size_t c, long long v) {
    a[r * cols + c] = fp_reduce(p, v);
}

FpMat FpMat::identity(uint8_t p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMat FpMat::from_columns(uint8_t p, std::size_t dim,
                          const std::vector<FpVec>& cols) {
    FpMat m(p, dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].p != p || cols[c].dim() != dim)
            throw std::invalid_argument("from_columns: mismatched column");
        for (std::size_t r = 0; r < dim; ++r) m.a[r * m.cols + c] = cols[c][r];
    }
    return m;
}

FpMat FpMat::from_rows(uint8_t p, std::size_t dim,
                       const std::vector<FpVec>& rows) {
    FpMat m(p, rows.size(), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].p != p || rows[r].dim() != dim)
            throw std::invalid_argument("from_rows: mismatched row");
        std::copy(rows[r].coords.begin(), rows[r].coords.end(),
                  m.a.begin() + static_cast<long>(r * dim));
    }
    return m;
}

FpVec FpMat::row(std::size_t r) const {
    FpVec v(p, cols);
    std::copy(a.begin() + static_cast<long>(r * cols),
              a.begin() + static_cast<long>((r + 1) * cols), v.coords.begin());
    return v;
}

FpVec FpMat::col(std::size_t c) const {
    FpVec v(p, rows);
    for (std::size_t r = 0; r < rows; ++r) v.coords[r] = at(r, c);
    return v;
}

FpVec mul(const FpMat& A, const FpVec& x) {
    if (A.p != x.p || A.cols != x.dim())
        throw std::invalid_argument("mul: dimension mismatch");
    FpVec r(A.p, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < A.cols; ++j) acc += A.at(i, j) * x[j];
        r.coords[i] = static_cast<uint8_t>(acc % A.p);
    }
    return r;
}

FpMat mul(const FpMat& A, const FpMat& B) {
    if (A.p != B.p || A.cols != B.rows)
        throw std::invalid_argument("mul: dimension mismatch");
    FpMat r(A.p, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            uint8_t aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                r.a[i * r.cols + j] = static_cast<uint8_t>(
                    (r.a[i * r.cols + j] + aik * B.at(k, j)) % A.p);
        }
    return r;
}

FpMat transpose(const FpMat& A) {
    FpMat r(A.p, A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) r.a[j * r.cols + i] = A.at(i, j);
    return r;
}

FpMat vstack(const FpMat& A, const FpMat& B) {
    if (A.p != B.p || A.cols != B.cols)
        throw std::invalid_argument("vstack: column mismatch");
    FpMat r(A.p, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), r.a.begin());
    std::copy(B.a.begin(), B.a.end(), r.a.begin() + static_cast<long>(A.a.size()));
    return r;
}

// ---------------------------------------------------------------------------
// Row reduction. One byte-array implementation for odd p and a bit-packed
// one for p = 2; both produce the (unique) reduced row echelon form with
// pivots in increasing column order.

namespace {

struct Rref {
    std::vector<std::vector<uint8_t>> rows;  // RREF rows, byte form
    std::vector<std::size_t> pivots;         // pivot column per row
};

Rref rref_bytes(uint8_t p, std::size_t cols,
                std::vector<std::vector<uint8_t>> work) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && work[piv][c] == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        uint8_t inv = fp_inv(p, work[r][c]);
        if (inv != 1)
            for (auto& x : work[r]) x = fp_mul(p, x, inv);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == r || work[i][c] == 0) continue;
            uint8_t f = work[i][c];
            for (std::size_t j = c; j < cols; ++j)
                work[i][j] = fp_sub(p, work[i][j], fp_mul(p, f, work[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    work.resize(r);
    out.rows = std::move(work);
    return out;
}

Rref rref_bits(std::size_t cols, const std::vector<std::vector<uint8_t>>& in) {
    std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> work(in.size(),
                                            std::vector<uint64_t>(words, 0));
    for (std::size_t i = 0; i < in.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (in[i][j]) work[i][j / 64] |= uint64_t(1) << (j % 64);

    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < work.size(); ++c) {
        uint64_t mask = uint64_t(1) << (c % 64);
        std::size_t w = c / 64;
        std::size_t piv = r;
        while (piv < work.size() && !(work[piv][w] & mask)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == r || !(work[i][w] & mask)) continue;
            for (std::size_t k = w; k < words; ++k) work[i][k] ^= work[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows.assign(r, std::vector<uint8_t>(cols, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.rows[i][j] =
                static_cast<uint8_t>((work[i][j / 64] >> (j % 64)) & 1);
    return out;
}

Rref compute_rref(const FpMat& A) {
    require_prime(A.p);
    std::vector<std::vector<uint8_t>> rows(A.rows,
                                           std::vector<uint8_t>(A.cols, 0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) rows[i][j] = A.at(i, j);
    return A.p == 2 ? rref_bits(A.cols, rows)
                    : rref_bytes(A.p, A.cols, std::move(rows));
}

}  // namespace

std::size_t rank(const FpMat& A) { return compute_rref(A).pivots.size(); }

std::optional<FpVec> solve(const FpMat& A, const FpVec& b) {
    if (A.p != b.p || A.rows != b.dim())
        throw std::invalid_argument("solve: dimension mismatch");
    FpMat aug(A.p, A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.a[i * aug.cols + j] = A.at(i, j);
        aug.a[i * aug.cols + A.cols] = b[i];
    }
    Rref e = compute_rref(aug);
    FpVec x(A.p, A.cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == A.cols) return std::nullopt;  // pivot in rhs column
        x.coords[e.pivots[r]] = e.rows[r][A.cols];
    }
    return x;
}

std::vector<FpVec> kernel_basis(const FpMat& A) {
    Rref e = compute_rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        FpVec v(A.p, A.cols);
        v.coords[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v.coords[e.pivots[r]] = fp_neg(A.p, e.rows[r][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> affine_intersect(const FpVec& c1,
                                      const std::vector<FpVec>& S1,
                                      const FpVec& c2,
                                      const std::vector<FpVec>& S2) {
    require_same(c1, c2);
    std::vector<FpVec> cols;
    cols.reserve(S1.size() + S2.size());
    for (const FpVec& s : S1) cols.push_back(s);
    for (const FpVec& s : S2) cols.push_back(-s);
    FpMat M = FpMat::from_columns(c1.p, c1.dim(), cols);
    auto t = solve(M, c2 - c1);
    if (!t) return std::nullopt;
    FpVec point = c1;
    for (std::size_t i = 0; i < S1.size(); ++i)
        add_scaled(point, (*t)[i], S1[i]);
    return point;
}

// ---------------------------------------------------------------------------
// RrefBasis

RrefBasis::RrefBasis(uint8_t p, std::size_t dim)
    : p_(p), dim_(dim), words_((dim + 63) / 64) {
    require_prime(p);
}

void RrefBasis::reduce_bits(std::vector<uint64_t>& row) const {
    for (std::size_t r = 0; r < bit_rows_.size(); ++r) {
        std::size_t c = pivots_[r];
        if (row[c / 64] & (uint64_t(1) << (c % 64)))
            for (std::size_t k = c / 64; k < words_; ++k)
                row[k] ^= bit_rows_[r][k];
    }
}

void RrefBasis::reduce_bytes(std::vector<uint8_t>& row) const {
    for (std::size_t r = 0; r < byte_rows_.size(); ++r) {
        std::size_t c = pivots_[r];
        uint8_t f = row[c];
        if (f == 0) continue;
        for (std::size_t k = c; k < dim_; ++k)
            row[k] = fp_sub(p_, row[k], fp_mul(p_, f, byte_rows_[r][k]));
    }
}

bool RrefBasis::insert(const FpVec& v) {
    if (v.p != p_ || v.dim() != dim_)
        throw std::invalid_argument("RrefBasis: dimension mismatch");
    if (p_ == 2) {
        std::vector<uint64_t> row(words_, 0);
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j]) row[j / 64] |= uint64_t(1) << (j % 64);
        reduce_bits(row);
        std::size_t piv = dim_;
        for (std::size_t w = 0; w < words_ && piv == dim_; ++w)
            if (row[w]) piv = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
        if (piv == dim_) return false;
        // back-eliminate the new pivot from existing rows, keep sorted
        for (std::size_t r = 0; r < bit_rows_.size(); ++r)
            if (bit_rows_[r][piv / 64] & (uint64_t(1) << (piv % 64)))
                for (std::size_t k = piv / 64; k < words_; ++k)
                    bit_rows_[r][k] ^= row[k];
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, piv);
        bit_rows_.insert(bit_rows_.begin() + static_cast<long>(idx), std::move(row));
        return true;
    }
    std::vector<uint8_t> row(v.coords.begin(), v.coords.end());
    reduce_bytes(row);
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (row[j]) { piv = j; break; }
    if (piv == dim_) return false;
    uint8_t inv = fp_inv(p_, row[piv]);
    if (inv != 1)
        for (auto& x : row) x = fp_mul(p_, x, inv);
    for (std::size_t r = 0; r < byte_rows_.size(); ++r) {
        uint8_t f = byte_rows_[r][piv];
        if (f == 0) continue;
        for (std::size_t k = piv; k < dim_; ++k)
            byte_rows_[r][k] = fp_sub(p_, byte_rows_[r][k], fp_mul(p_, f, row[k]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    byte_rows_.insert(byte_rows_.begin() + static_cast<long>(idx), std::move(row));
    return true;
}

bool RrefBasis::contains(const FpVec& v) const {
    if (v.p != p_ || v.dim() != dim_)
        throw std::invalid_argument("RrefBasis: dimension mismatch");
    if (p_ == 2) {
        std::vector<uint64_t> row(words_, 0);
        for (std::size_t j = 0; j < dim_; ++j)
            if (v[j]) row[j / 64] |= uint64_t(1) << (j % 64);
        reduce_bits(row);
        for (uint64_t w : row)
            if (w) return false;
        return true;
    }
    std::vector<uint8_t> row(v.coords.begin(), v.coords.end());
    reduce_bytes(row);
    return std::all_of(row.begin(), row.end(), [](uint8_t x) { return x == 0; });
}

std::vector<FpVec> RrefBasis::basis() const {
    std::vector<FpVec> out;
    out.reserve(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        FpVec v(p_, dim_);
        if (p_ == 2) {
            for (std::size_t j = 0; j < dim_; ++j)
                v.coords[j] = static_cast<uint8_t>(
                    (bit_rows_[r][j / 64] >> (j % 64)) & 1);
        } else {
            v.coords.assign(byte_rows_[r].begin(), byte_rows_[r].end());
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace qgk
