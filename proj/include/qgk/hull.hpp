#pragma once

#include <optional>
#include <vector>

#include "qgk/bilform.hpp"

namespace qgk {

// Degreewise data of the purely quadratic algebra T(V)/I, where I is the
// two-sided ideal generated by the pure tensors v⊗v' with b(v,v') = 0.
struct HullTruncation {
    uint8_t p = 2;
    std::size_t dmax = 3;
    std::vector<std::size_t> dims;  // dims[k] = dim of degree-k component
    // RREF basis of the degree-k ideal component inside V^{⊗k} (flattened
    // to F_p^{n^k}); empty for k < 2.
    std::vector<std::vector<FpVec>> ideal_bases;
};

// Canonical (RREF) basis of span{ v⊗v' : b(v,v') = 0 } in F_p^{n^2},
// streaming all p^(2n) ordered pairs. Guard: p^(2n) <= 2^16.
std::vector<FpVec> pure_kernel_span(const AugBilinearMap& M);

// dims[k] = n^k - dim( sum_j V^{⊗j} ⊗ I2 ⊗ V^{⊗(k-2-j)} ) for k >= 2.
// Guards: the pure_kernel_span guard and n^dmax <= 2^14; dmax <= 4.
HullTruncation hull_dims(const AugBilinearMap& M, std::size_t dmax);

struct HullMapResult {
    // (V, V⊗V / I2, induced product, eps) in the deterministic quotient
    // basis (non-pivot unit tensors of the I2 row echelon form).
    AugBilinearMap map;
    // whether I2 equals the full kernel of V⊗V -> W
    bool pure_equals_kernel = false;
    // the product-induced isomorphism map -> M; present exactly when
    // pure_equals_kernel holds and M is surjective
    std::optional<Morphism> iso;
};

HullMapResult functor_F_of_G(const AugBilinearMap& M);

}  // namespace qgk
