#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgk/fpla.hpp"

namespace qgk {

// An augmented bilinear map (V, W, b, eps) over F_p in finite-dimensional
// form: V = F_p^n on a fixed basis, W = F_p^m, b given by its Gram table
// of W-valued basis products and extended bilinearly, and a distinguished
// eps in V with b(v, eps + v) = 0 for all v and 2*eps = 0.
struct AugBilinearMap {
    uint8_t p = 2;
    std::size_t n = 0;  // dim V
    std::size_t m = 0;  // dim W
    std::vector<FpVec> gram;  // n*n entries row-major; gram[i*n+j] = b(v_i, v_j)
    FpVec eps;                // coordinates of eps in the V basis
    std::vector<std::string> vlabels;  // optional, empty or size n
    std::vector<std::string> wlabels;  // optional, empty or size m

    static AugBilinearMap zero(uint8_t p, std::size_t n, std::size_t m);

    const FpVec& b(std::size_t i, std::size_t j) const { return gram[i * n + j]; }
    FpVec& b(std::size_t i, std::size_t j) { return gram[i * n + j]; }
};

// b(v, u) by bilinear extension of the Gram table.
FpVec eval(const AugBilinearMap& M, const FpVec& v, const FpVec& u);

// Matrix of the partial map u -> b(v, u), shape m x n.
FpMat left_action(const AugBilinearMap& M, const FpVec& v);

// m x n^2 matrix whose column (i*n+j) is b(v_i, v_j).
FpMat products_matrix(const AugBilinearMap& M);

struct Violation {
    enum class Kind { NotSkew, EpsOrder, AxiomI, Malformed };
    Kind kind;
    std::size_t i = 0, j = 0;  // offending basis indices where applicable
    std::string detail;
};

std::string to_string(Violation::Kind k);

// Empty iff M satisfies all axioms for every v in V. The check is
// basis-level: the axiom b(v, eps+v) = 0 holds for all v iff the Gram
// table is skew-symmetric and, when p = 2, b(v_i,v_i) = b(v_i,eps) on
// every basis vector (the defect v -> b(v,v) - b(v,eps) is linear once
// b is symmetric over F_2); for odd p skew-symmetry forces alternation
// and the axiom reduces to eps = 0.
std::vector<Violation> validate(const AugBilinearMap& M);
bool is_valid(const AugBilinearMap& M);

// True iff the basis products span W.
bool is_surjective(const AugBilinearMap& M);

struct Morphism {
    FpMat f1;  // n' x n, acts on V coordinates
    FpMat f2;  // m' x m, acts on W coordinates
    AugBilinearMap source, target;
};

// Description of the first violated morphism invariant, or nullopt if
// f1(eps) = eps' and f2(b(u,v)) = b'(f1 u, f1 v) on all basis pairs.
std::optional<std::string> morphism_violation(const Morphism& f);

// True iff f1 and f2 are both injective. Throws if the morphism
// invariants fail (reported before the rank check).
bool check_monomorphism(const Morphism& f);

Morphism compose(const Morphism& g, const Morphism& f);  // g after f

// Block sum: V = V1+V2, W = W1+W2, cross products zero, eps = 0.
// Requires eps = 0 on both sides; there is no canonical finite model of
// an amalgamation identifying nonzero augmentations, so that case is
// rejected rather than guessed.
AugBilinearMap free_product(const AugBilinearMap& M1, const AugBilinearMap& M2);

// Exact equality of (p, n, m, gram, eps); labels are ignored.
bool equal(const AugBilinearMap& M1, const AugBilinearMap& M2);

// Whether the V-basis relabeling i -> sigma[i] extends to an isomorphism
// M1 -> M2 of augmented maps. The W side is induced by the products:
// b1(v_i,v_j) -> b2(v_sigma(i),v_sigma(j)) must be well defined and
// injective on the span of the products, and dim W must agree.
bool permuted_equal(const AugBilinearMap& M1, const AugBilinearMap& M2,
                    const std::vector<std::size_t>& sigma);

// Text form: "p", "dimV", "dimW", "eps" header lines, then one
// "b i j w1..wm" line per ordered basis pair in row-major order.
std::string write_map(const AugBilinearMap& M);
AugBilinearMap parse_map(const std::string& text);

}  // namespace qgk
