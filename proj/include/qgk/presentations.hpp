#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgk/bilform.hpp"
#include "qgk/graphs.hpp"

namespace qgk {

// A free-group word as a sequence of (generator, exponent) syllables.
// Generators are 0-based; exponents are nonzero and adjacent syllables
// with the same generator are merged.
struct Word {
    std::vector<std::pair<unsigned, long long>> letters;

    static Word from_letters(std::vector<std::pair<unsigned, long long>> ls);
};

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
// [a,b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;
};

// Format: "gens x y ... ;" then "rel <word> ;" lines, where a word is a
// whitespace-free product of atoms g, g^k (k nonzero, possibly negative)
// and [w1,w2] with nesting. Generator names match longest-first.
Presentation parse_presentation(const std::string& text);
Word parse_word(const std::string& text, const std::vector<std::string>& gens);

// Coordinates of a word in the quotient of the free pro-p group by the
// third step of its lower p-central filtration: w = prod x_i^{c_i} *
// prod_{i<j} [x_i,x_j]^{d_ij}, with c mod p^2 and d mod p. The form is
// unique; commutators are central here and x^(p^2) is trivial.
struct NormalFormS3 {
    uint8_t p = 2;
    std::size_t n = 0;
    std::vector<uint16_t> c;  // entries in [0, p^2)
    std::vector<uint8_t> d;   // strictly upper triangle, flattened by rows

    static NormalFormS3 zero(uint8_t p, std::size_t n);
    uint8_t dval(std::size_t i, std::size_t j) const;  // i < j
    void dset(std::size_t i, std::size_t j, long long v);
    bool operator==(const NormalFormS3&) const = default;
};

// Collection: adjacent syllables x_k^s x_j^t with k > j are swapped into
// x_j^t x_k^s while d_jk picks up -s*t, then powers merge; exponents
// reduce mod p^2 and commutator coordinates mod p.
NormalFormS3 collect_mod_s3(const Word& w, std::size_t n, uint8_t p);

// Group law and inverse on normal forms (the collection map is a
// homomorphism onto these).
NormalFormS3 nf_mul(const NormalFormS3& a, const NormalFormS3& b);
NormalFormS3 nf_inv(const NormalFormS3& a);

// Degree-2 truncation of the free-algebra expansion x_i -> 1 + X_i,
// x_i^-1 -> 1 - X_i + X_i^2. Linear coefficients (the exponent sums)
// come out mod p^2, quadratic ones mod p. Independent of collection;
// for every word, d_ij = eps2[i][j] - e_i*e_j (mod p) for i < j.
struct MagnusDeg2 {
    std::vector<uint16_t> e;     // length n, mod p^2
    std::vector<uint8_t> eps2;   // n*n row-major, mod p
};

MagnusDeg2 magnus_degree2(const Word& w, std::size_t n, uint8_t p);

// For a relator in the Frattini subgroup (all exponent sums divisible
// by p): a_i = c_i / p and the commutator coordinates.
struct RelatorCoords {
    FpVec a;                   // length n
    std::vector<uint8_t> arel; // strictly upper triangle, mod p
};

RelatorCoords relator_coordinates(const Word& w, std::size_t n, uint8_t p);

// The bilinear map on the dual basis of the generators with values in
// the relator coordinates: off-diagonal entries from the commutator
// coordinates (skew-extended), diagonal entries zero for odd p and a_i
// at p = 2, and eps solved from b(v_i, eps) = b(v_i, v_i). Requires the
// relator coordinate vectors to be linearly independent.
AugBilinearMap presentation_cup_product(const Presentation& P, uint8_t p);

// Generators = vertices, one commutator relator per edge in the
// lexicographic edge order.
Presentation raag_presentation(const SimplicialGraph& g);

}  // namespace qgk
