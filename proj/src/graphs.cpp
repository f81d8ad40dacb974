#include "qgk/graphs.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qgk/parse_error.hpp"

namespace qgk {

bool SimplicialGraph::adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::optional<std::size_t> SimplicialGraph::edge_index(std::size_t i,
                                                       std::size_t j) const {
    if (i == j) return std::nullopt;
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
    if (it == edges.end() || *it != std::make_pair(i, j))
        return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
}

std::size_t SimplicialGraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

SimplicialGraph SimplicialGraph::from_edges(
    std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("loop edge");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.second >= n) throw std::invalid_argument("vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    return SimplicialGraph{n, std::move(edges)};
}

SimplicialGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string content = line.substr(0, line.find('#'));
        std::istringstream ls(content);
        if (!n) {
            long long v;
            if (!(ls >> v)) {
                std::string tok;
                std::istringstream probe(content);
                if (probe >> tok) throw ParseError(lineno, "expected vertex count");
                continue;  // blank or comment-only line
            }
            if (v < 1) throw ParseError(lineno, "vertex count must be positive");
            if (v > 128)
                throw ParseError(lineno, "vertex count exceeds the supported "
                                         "desk scale");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens");
            n = static_cast<std::size_t>(v);
            continue;
        }
        long long i, j;
        if (!(ls >> i)) continue;  // blank or comment-only line
        if (!(ls >> j)) throw ParseError(lineno, "expected 'i j' edge line");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens");
        if (i < 1 || j < 1 || i > static_cast<long long>(*n) ||
            j > static_cast<long long>(*n))
            throw ParseError(lineno, "vertex out of range");
        if (i == j) throw ParseError(lineno, "loop edge");
        std::size_t a = static_cast<std::size_t>(i - 1);
        std::size_t b = static_cast<std::size_t>(j - 1);
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    if (!n) throw ParseError(lineno, "missing vertex count");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ParseError(lineno, "duplicate edge");
    return SimplicialGraph{*n, std::move(edges)};
}

std::string write_graph(const SimplicialGraph& g) {
    std::ostringstream os;
    os << g.n << "\n";
    for (const auto& e : g.edges)
        os << (e.first + 1) << ' ' << (e.second + 1) << "\n";
    return os.str();
}

std::string to_string(const ForbiddenWitness& w) {
    std::ostringstream os;
    os << (w.kind == ForbiddenWitness::Kind::L3 ? "L3" : "C4") << " [";
    for (std::size_t i = 0; i < 4; ++i)
        os << (i ? " " : "") << (w.vertices[i] + 1);
    os << "]";
    return os.str();
}

namespace {

// Classifies the induced subgraph on {a,b,c,d}; a witness is produced
// only for the 4-vertex line (3 edges, degrees 1,2,2,1) and circle
// (4 edges, all degrees 2) patterns.
std::optional<ForbiddenWitness> classify_quad(const SimplicialGraph& g,
                                              std::array<std::size_t, 4> q) {
    std::array<std::array<bool, 4>, 4> adj{};
    std::array<int, 4> deg{};
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(q[static_cast<std::size_t>(i)],
                           q[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                        true;
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
                ++edges;
            }

    auto walk_from = [&](std::size_t start) {
        // follow edges without immediate backtracking
        std::array<std::size_t, 4> order{};
        order[0] = start;
        std::size_t prev = 4;
        for (int step = 1; step < 4; ++step) {
            std::size_t cur = order[static_cast<std::size_t>(step - 1)];
            std::size_t nxt = 4;
            for (std::size_t t = 0; t < 4; ++t)
                if (t != prev && adj[cur][t] && (nxt == 4 || t < nxt)) nxt = t;
            order[static_cast<std::size_t>(step)] = nxt;
            prev = cur;
        }
        return order;
    };

    if (edges == 3) {
        std::array<int, 4> sorted = deg;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != std::array<int, 4>{1, 1, 2, 2}) return std::nullopt;
        std::size_t endpoint = 0;
        while (deg[endpoint] != 1) ++endpoint;
        auto order = walk_from(endpoint);
        ForbiddenWitness w{ForbiddenWitness::Kind::L3, {}};
        for (std::size_t i = 0; i < 4; ++i) w.vertices[i] = q[order[i]];
        return w;
    }
    if (edges == 4) {
        if (deg != std::array<int, 4>{2, 2, 2, 2}) return std::nullopt;
        auto order = walk_from(0);
        ForbiddenWitness w{ForbiddenWitness::Kind::C4, {}};
        for (std::size_t i = 0; i < 4; ++i) w.vertices[i] = q[order[i]];
        return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden(const SimplicialGraph& g) {
    if (g.n < 4) return std::nullopt;
    for (std::size_t a = 0; a < g.n; ++a)
        for (std::size_t b = a + 1; b < g.n; ++b)
            for (std::size_t c = b + 1; c < g.n; ++c)
                for (std::size_t d = c + 1; d < g.n; ++d)
                    if (auto w = classify_quad(g, {a, b, c, d})) return w;
    return std::nullopt;
}

bool verify_witness(const SimplicialGraph& g, const ForbiddenWitness& w) {
    const auto& v = w.vertices;
    std::array<std::size_t, 4> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t x : v)
        if (x >= g.n) return false;
    bool cycle = w.kind == ForbiddenWitness::Kind::C4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool want = (j == i + 1) || (cycle && i == 0 && j == 3);
            if (g.adjacent(v[static_cast<std::size_t>(i)],
                           v[static_cast<std::size_t>(j)]) != want)
                return false;
        }
    return true;
}

std::vector<std::size_t> tree_vertex_order(const ConstructionTree& t) {
    std::vector<std::size_t> order;
    switch (t.kind) {
        case ConstructionTree::Kind::Leaf:
            order.push_back(t.label);
            break;
        case ConstructionTree::Kind::Cone:
            order = tree_vertex_order(t.children[0]);
            order.push_back(t.label);
            break;
        case ConstructionTree::Kind::Free:
            for (const auto& c : t.children) {
                auto sub = tree_vertex_order(c);
                order.insert(order.end(), sub.begin(), sub.end());
            }
            break;
    }
    return order;
}

namespace {

// Recursion over induced subgraphs; `verts` keeps original labels.
std::optional<ConstructionTree> decompose_verts(
    const SimplicialGraph& g, const std::vector<std::size_t>& verts) {
    if (verts.size() == 1)
        return ConstructionTree{ConstructionTree::Kind::Leaf, verts[0], {}};

    // connected components within verts
    std::vector<std::size_t> comp(verts.size(), SIZE_MAX);
    std::size_t ncomp = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (comp[s] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t t = 0; t < verts.size(); ++t)
                if (comp[t] == SIZE_MAX && g.adjacent(verts[cur], verts[t])) {
                    comp[t] = ncomp;
                    stack.push_back(t);
                }
        }
        ++ncomp;
    }

    if (ncomp > 1) {
        ConstructionTree free{ConstructionTree::Kind::Free, 0, {}};
        for (std::size_t c = 0; c < ncomp; ++c) {
            std::vector<std::size_t> sub;
            for (std::size_t t = 0; t < verts.size(); ++t)
                if (comp[t] == c) sub.push_back(verts[t]);
            auto child = decompose_verts(g, sub);
            if (!child) return std::nullopt;
            free.children.push_back(std::move(*child));
        }
        return free;
    }

    // connected: smallest-index universal vertex, if any
    for (std::size_t s = 0; s < verts.size(); ++s) {
        bool universal = true;
        for (std::size_t t = 0; t < verts.size() && universal; ++t)
            if (t != s && !g.adjacent(verts[s], verts[t])) universal = false;
        if (universal) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < verts.size(); ++t)
                if (t != s) rest.push_back(verts[t]);
            auto child = decompose_verts(g, rest);
            if (!child) return std::nullopt;
            ConstructionTree cone{ConstructionTree::Kind::Cone, verts[s], {}};
            cone.children.push_back(std::move(*child));
            return cone;
        }
    }
    return std::nullopt;
}

}  // namespace

DecomposeResult decompose(const SimplicialGraph& g) {
    if (g.n == 0) throw std::invalid_argument("decompose: empty graph");
    std::vector<std::size_t> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    if (auto tree = decompose_verts(g, all)) return *tree;
    auto w = find_forbidden(g);
    if (!w)
        throw std::logic_error(
            "decompose failed on a graph with no induced 4-line/4-circle");
    return *w;
}

AugBilinearMap graph_bilinear(const SimplicialGraph& g, uint8_t p) {
    if (!is_supported_prime(p))
        throw std::invalid_argument("unsupported prime");
    AugBilinearMap M = AugBilinearMap::zero(p, g.n, g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [k, l] = g.edges[e];
        M.b(k, l).coords[e] = 1;
        M.b(l, k).coords[e] = fp_neg(p, 1);
    }
    M.vlabels.reserve(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        M.vlabels.push_back("v" + std::to_string(i + 1));
    M.wlabels.reserve(g.edges.size());
    for (const auto& e : g.edges)
        M.wlabels.push_back("e" + std::to_string(e.first + 1) + "," +
                            std::to_string(e.second + 1));
    return M;
}

std::size_t edge_slot_count(std::size_t n) { return n * (n - 1) / 2; }

namespace {

std::size_t slot_of(std::size_t n, std::size_t i, std::size_t j) {
    // lexicographic (i<j) pair index
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

SimplicialGraph graph_from_mask(std::size_t n, uint64_t mask) {
    SimplicialGraph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (mask & (uint64_t(1) << slot_of(n, i, j))) g.edges.emplace_back(i, j);
    return g;
}

uint64_t mask_from_graph(const SimplicialGraph& g) {
    uint64_t mask = 0;
    for (const auto& e : g.edges)
        mask |= uint64_t(1) << slot_of(g.n, e.first, e.second);
    return mask;
}

uint64_t canonical_mask(const SimplicialGraph& g) {
    if (g.n > 7) throw std::invalid_argument("canonical_mask: n > 7");
    std::vector<std::size_t> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = UINT64_MAX;
    do {
        uint64_t mask = 0;
        for (const auto& e : g.edges) {
            std::size_t a = perm[e.first], b = perm[e.second];
            if (a > b) std::swap(a, b);
            mask |= uint64_t(1) << slot_of(g.n, a, b);
        }
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

GraphEnumerator::GraphEnumerator(std::size_t n, bool up_to_iso)
    : n_(n), up_to_iso_(up_to_iso) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("GraphEnumerator: n must be in [1,7]");
    total_ = uint64_t(1) << edge_slot_count(n);
}

std::optional<SimplicialGraph> GraphEnumerator::next() {
    while (!done_) {
        if (mask_ >= total_) {
            done_ = true;
            break;
        }
        SimplicialGraph g = graph_from_mask(n_, mask_++);
        if (!up_to_iso_ || canonical_mask(g) == mask_ - 1) return g;
    }
    return std::nullopt;
}

}  // namespace qgk
