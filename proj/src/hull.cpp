#include "qgk/hull.hpp"

#include <stdexcept>
#include <string>

namespace qgk {

namespace {

RrefBasis pure_span_basis(const AugBilinearMap& M) {
    auto cnt = checked_pow(M.p, 2 * M.n, 1 << 16);
    if (!cnt)
        throw std::invalid_argument("pure_kernel_span: size guard exceeded (p^" +
                                    std::to_string(2 * M.n) + " > 2^16)");
    RrefBasis span(M.p, M.n * M.n);
    FpVec v(M.p, M.n);
    do {
        FpMat L = left_action(M, v);
        FpVec u(M.p, M.n);
        do {
            if (!mul(L, u).is_zero()) continue;
            FpVec tensor(M.p, M.n * M.n);
            for (std::size_t i = 0; i < M.n; ++i) {
                if (v[i] == 0) continue;
                for (std::size_t j = 0; j < M.n; ++j)
                    tensor.coords[i * M.n + j] = fp_mul(M.p, v[i], u[j]);
            }
            span.insert(tensor);
        } while (next_vec(u));
    } while (next_vec(v));
    return span;
}

}  // namespace

std::vector<FpVec> pure_kernel_span(const AugBilinearMap& M) {
    return pure_span_basis(M).basis();
}

HullTruncation hull_dims(const AugBilinearMap& M, std::size_t dmax) {
    if (dmax > 4) throw std::invalid_argument("hull_dims: dmax capped at 4");
    if (M.n > 0 && !checked_pow(M.n, dmax, 1 << 14))
        throw std::invalid_argument("hull_dims: size guard exceeded (n^" +
                                    std::to_string(dmax) + " > 2^14)");
    HullTruncation out;
    out.p = M.p;
    out.dmax = dmax;
    out.dims.resize(dmax + 1);
    out.ideal_bases.resize(dmax + 1);
    out.dims[0] = 1;
    if (dmax >= 1) out.dims[1] = M.n;
    if (dmax < 2) return out;

    std::vector<FpVec> quad = pure_kernel_span(M);
    out.ideal_bases[2] = quad;
    out.dims[2] = M.n * M.n - quad.size();

    std::size_t n = M.n;
    for (std::size_t k = 3; k <= dmax; ++k) {
        std::size_t total = 1;
        for (std::size_t t = 0; t < k; ++t) total *= n;
        RrefBasis span(M.p, total);
        // degree-k component of the ideal: all position injections of the
        // degree-2 generators
        for (std::size_t j = 0; j + 2 <= k; ++j) {
            std::size_t left = 1, right = 1;
            for (std::size_t t = 0; t < j; ++t) left *= n;
            for (std::size_t t = 0; t < k - 2 - j; ++t) right *= n;
            for (const FpVec& beta : quad)
                for (std::size_t a = 0; a < left; ++a)
                    for (std::size_t c = 0; c < right; ++c) {
                        FpVec vec(M.p, total);
                        for (std::size_t s = 0; s < n; ++s)
                            for (std::size_t t = 0; t < n; ++t) {
                                uint8_t x = beta[s * n + t];
                                if (x == 0) continue;
                                std::size_t idx =
                                    ((a * n + s) * n + t) * right + c;
                                vec.coords[idx] = x;
                            }
                        span.insert(vec);
                    }
        }
        out.ideal_bases[k] = span.basis();
        out.dims[k] = total - span.dim_span();
    }
    return out;
}

HullMapResult functor_F_of_G(const AugBilinearMap& M) {
    RrefBasis span = pure_span_basis(M);
    auto basis = span.basis();
    std::size_t nn = M.n * M.n;

    std::vector<bool> is_pivot(nn, false);
    for (const FpVec& row : basis) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        is_pivot[piv] = true;
    }
    std::vector<std::size_t> quot_coord;  // non-pivot tensor slots, ascending
    for (std::size_t t = 0; t < nn; ++t)
        if (!is_pivot[t]) quot_coord.push_back(t);
    std::size_t q = quot_coord.size();

    // canonical coset representative: eliminate pivot coordinates
    auto reduce = [&](FpVec x) {
        for (const FpVec& row : basis) {
            std::size_t piv = 0;
            while (row[piv] == 0) ++piv;
            uint8_t f = x[piv];
            if (f) add_scaled(x, fp_neg(M.p, f), row);
        }
        return x;
    };
    auto quotient_coords = [&](const FpVec& x) {
        FpVec r = reduce(x);
        FpVec out(M.p, q);
        for (std::size_t t = 0; t < q; ++t) out.coords[t] = r[quot_coord[t]];
        return out;
    };

    HullMapResult res;
    res.map = AugBilinearMap::zero(M.p, M.n, q);
    res.map.eps = M.eps;
    res.map.vlabels = M.vlabels;
    for (std::size_t i = 0; i < M.n; ++i)
        for (std::size_t j = 0; j < M.n; ++j) {
            FpVec e(M.p, nn);
            e.coords[i * M.n + j] = 1;
            res.map.b(i, j) = quotient_coords(e);
        }

    std::size_t full_kernel_dim = nn - rank(products_matrix(M));
    res.pure_equals_kernel = span.dim_span() == full_kernel_dim;

    if (res.pure_equals_kernel && is_surjective(M)) {
        // W-side map [v_i ⊗ v_j] -> b(v_i, v_j) on the quotient basis
        FpMat f2(M.p, M.m, q);
        for (std::size_t t = 0; t < q; ++t) {
            std::size_t i = quot_coord[t] / M.n, j = quot_coord[t] % M.n;
            const FpVec& g = M.b(i, j);
            for (std::size_t r = 0; r < M.m; ++r) f2.a[r * q + t] = g[r];
        }
        Morphism iso{FpMat::identity(M.p, M.n), f2, res.map, M};
        if (morphism_violation(iso))
            throw std::logic_error("functor_F_of_G: induced map is not a morphism");
        res.iso = std::move(iso);
    }
    return res;
}

}  // namespace qgk
