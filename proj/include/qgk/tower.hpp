#pragma once

#include <array>
#include <string>
#include <vector>

#include "qgk/bilform.hpp"
#include "qgk/graphs.hpp"

namespace qgk {

// A bilinear map together with Kummer-style symbol names for its bases
// (kept on the map) and a construction log.
struct FieldData {
    AugBilinearMap map;
    std::vector<std::string> provenance;
};

enum class BaseFieldKind { Complex, Z2Ext, Q2 };

// Complex: zero-dimensional data, eps = 0.
// Z2Ext (p = 2): one generator (-1) with W = 0; eps = (-1) is nonzero
// but its square vanishes (a field where -1 is a sum of two squares but
// not a square).
// Q2 (p = 2): generators (-1), (2), (5) and one W generator; the only
// nonzero products are (-1)(-1) and (2)(5), matching the 2-adic Hilbert
// symbols.
FieldData base_field(BaseFieldKind kind, uint8_t p);

struct ExtensionResult {
    FieldData field;
    Morphism restriction;  // the original data into the extension
};

// Cohomology of an iterated power-series extension with value group Z^m:
// V' = V + <t_1..t_m>, W' = W + (V ⊗ new) + Λ²(new), and
// b'((v,a),(v',a')) = (b(v,v'), v⊗a' - v'⊗a + eps⊗(a⊙a'), a∧a').
// The diagonal correction realizes t∪t = eps∪t. W basis order: old W,
// then V⊗new (old-basis-major), then Λ² in lexicographic order.
ExtensionResult extend_power_series(const FieldData& K, std::size_t m);

// Completes a skew-symmetric map to an augmented one: unchanged for odd
// p (eps = 0); for p = 2 a new basis vector eps is added with
// b^(v+a*eps, v'+a'*eps) = b(v,v') + a'*b(v,v) + a*b(v',v'). The input
// eps is ignored.
AugBilinearMap extend_to_augmented(const AugBilinearMap& skew);

FieldData free_product_fields(const FieldData& K1, const FieldData& K2);

// Leaf -> one power-series generator over the zero-dimensional base;
// Cone -> one more generator over the child (its W gets one new product
// per child generator, the cone edges); Free -> block sum.
FieldData eval_tree(const ConstructionTree& t, uint8_t p);

// s-expressions: (v <label>), (* <tree> <label>), (+ <tree> <tree> ...);
// labels are 1-based vertex numbers.
ConstructionTree parse_tree(const std::string& text);
std::string format_tree(const ConstructionTree& t);

// 2-adic Hilbert symbols on the square classes {±1, ±2, ±5, ±10},
// additively: 0 = split, 1 = nonsplit. The formula route uses
// (u,v) = eps(u)eps(v) + alpha*omega(v) + beta*omega(u) for
// a = 2^alpha u, b = 2^beta v; the search route decides solvability of
// ax² + by² = z² by scanning primitive triples modulo 2^k.
extern const std::array<int, 8> kQ2SquareClasses;
int hilbert2_formula(int a, int b);
int hilbert2_search(int a, int b, unsigned k = 8);

}  // namespace qgk
