#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgk/bilform.hpp"

namespace qgk {

// Finite simplicial graph: no loops, no double edges. Vertices are
// 0-based internally; the text format and all printed witnesses are
// 1-based. Edges are kept sorted lexicographically as (min,max) pairs,
// which fixes the W-basis order of the associated bilinear map.
struct SimplicialGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool adjacent(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t v) const;

    static SimplicialGraph from_edges(
        std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);
};

// Text format: first non-comment line is the vertex count, then one
// "i j" line per edge (1-based); '#' starts a comment line.
SimplicialGraph parse_graph(const std::string& text);
std::string write_graph(const SimplicialGraph& g);

// An induced 4-vertex line or circle, the obstructions to the
// cone/disjoint-union decomposition.
struct ForbiddenWitness {
    enum class Kind { L3, C4 };
    Kind kind;
    std::array<std::size_t, 4> vertices;  // in path / cycle order, 0-based
};

std::string to_string(const ForbiddenWitness& w);  // 1-based rendering

// First 4-subset (in lexicographic order) whose induced subgraph is a
// 4-vertex line or circle; absent if none.
std::optional<ForbiddenWitness> find_forbidden(const SimplicialGraph& g);

// Checks that the witness describes exactly the claimed induced subgraph.
bool verify_witness(const SimplicialGraph& g, const ForbiddenWitness& w);

// Recipe for building a graph from single vertices by disjoint unions
// (Free) and addition of a universal vertex (Cone).
struct ConstructionTree {
    enum class Kind { Leaf, Cone, Free };
    Kind kind = Kind::Leaf;
    std::size_t label = 0;                   // vertex, for Leaf and Cone apex
    std::vector<ConstructionTree> children;  // 1 for Cone, >= 2 for Free
};

// Leaf labels in depth-first order: the V-basis order of the evaluated
// construction (children first, cone apex last).
std::vector<std::size_t> tree_vertex_order(const ConstructionTree& t);

using DecomposeResult = std::variant<ConstructionTree, ForbiddenWitness>;

// Decomposes by components and smallest-index universal vertices. When a
// connected piece has no universal vertex the graph contains an induced
// 4-line or 4-circle, and the canonical witness for the whole graph is
// returned instead.
DecomposeResult decompose(const SimplicialGraph& g);

// V on the vertex basis, W on the lexicographic edge basis,
// b(v_k, v_l) = e for the edge e = {k,l} (skew-extended), eps = 0.
AugBilinearMap graph_bilinear(const SimplicialGraph& g, uint8_t p);

// Edge slots in lexicographic pair order; bit k of a mask is edge k.
std::size_t edge_slot_count(std::size_t n);
SimplicialGraph graph_from_mask(std::size_t n, uint64_t mask);
uint64_t mask_from_graph(const SimplicialGraph& g);

// Minimal edge mask over all vertex relabelings (n <= 7).
uint64_t canonical_mask(const SimplicialGraph& g);

// Streams all 2^C(n,2) labeled graphs in mask order, or one minimal
// representative per isomorphism class. n <= 7; the up-to-iso pass costs
// n! per graph, so n = 7 is expensive but allowed.
class GraphEnumerator {
public:
    GraphEnumerator(std::size_t n, bool up_to_iso);
    std::optional<SimplicialGraph> next();

private:
    std::size_t n_;
    bool up_to_iso_;
    uint64_t mask_ = 0, total_ = 0;
    bool done_ = false;
};

}  // namespace qgk
