#pragma once

#include <array>
#include <optional>
#include <string>

#include "qgk/bilform.hpp"

namespace qgk {

// A violating quadruple: b(v,u) = b(v2,u2) but no u'' satisfies both
// b(v,u'') = b(v,u) and b(v2,u'') = b(v2,u2).
struct SlotWitness {
    FpVec v, u, v2, u2;
};

struct SlotResult {
    bool has_slot = true;                // the common slot property holds
    std::optional<SlotWitness> witness;  // set when has_slot is false
};

// Direct transcription of the definition: enumerate quadruples
// (v,u,v2,u2) with b(v,u) = b(v2,u2) in lexicographic order and search
// all u'' exhaustively; the first violating quadruple is returned.
// Guard: p^n <= 2^12.
SlotResult has_common_slot_naive(const AugBilinearMap& M);

// Linear-algebra decision. The quadruple condition depends only on the
// pair (v,v2) and the shared value w: writing L_v = b(v,-), a common
// slot for value w exists iff (w,w) lies in the image of
// x -> (L_v x, L_v2 x), i.e. iff w is in D = L_v(ker(L_v - L_v2)).
// Hence the property fails at (v,v2) iff D is a proper subspace of
// I = Im L_v ∩ Im L_v2; the witness takes the lexicographically
// smallest w in I \ D and the deterministic solve() preimages.
// Guard: p^(2n) <= 2^16 (n <= 8 at p = 2).
SlotResult has_common_slot(const AugBilinearMap& M);

// Exhaustive re-verification of a claimed witness.
bool verify_slot_witness(const AugBilinearMap& M, const SlotWitness& w);

struct AxiomCheck {
    bool pass = true;
    std::string note;  // witness or certification note
};

// Marshall's quaternionic-map axioms for the pairing of an exponent-2
// group: the group is V written additively, -1 is eps, and the value set
// is the image of b with 0 distinguished (so surjectivity onto the value
// set is definitional).
struct QuaternionicReport {
    AxiomCheck axiom1;  // q(a,-a) = 1, i.e. b(v, eps+v) = 0
    AxiomCheck axiom2;  // q(a,b) = q(a,c) implies q(a,bc) = 1
    AxiomCheck axiom3;  // q(a,b) = q(b,a)
    AxiomCheck axiom4;  // common slot property
    std::optional<SlotWitness> slot_witness;

    bool all_pass() const {
        return axiom1.pass && axiom2.pass && axiom3.pass && axiom4.pass;
    }
};

// p = 2 only (the axioms concern exponent-2 groups).
QuaternionicReport is_quaternionic(const AugBilinearMap& M);

}  // namespace qgk
