#include "qgk/hull.hpp"

#include <stdexcept>

#include "doctest.h"
#include "qgk/graphs.hpp"

using namespace qgk;

namespace {

// Independent rank oracle: collect the raw pure tensors (no echelon
// bookkeeping), inject them at every position, and take a one-shot
// matrix rank.
std::vector<FpVec> raw_pure_tensors(const AugBilinearMap& M) {
    std::vector<FpVec> out;
    FpVec v(M.p, M.n);
    do {
        FpVec u(M.p, M.n);
        do {
            if (eval(M, v, u).is_zero()) {
                FpVec t(M.p, M.n * M.n);
                for (std::size_t i = 0; i < M.n; ++i)
                    for (std::size_t j = 0; j < M.n; ++j)
                        t.coords[i * M.n + j] = fp_mul(M.p, v[i], u[j]);
                if (!t.is_zero()) out.push_back(std::move(t));
            }
        } while (next_vec(u));
    } while (next_vec(v));
    return out;
}

std::size_t oracle_ideal_dim(const AugBilinearMap& M, std::size_t k) {
    auto gens = raw_pure_tensors(M);
    std::size_t n = M.n, total = 1;
    for (std::size_t t = 0; t < k; ++t) total *= n;
    std::vector<FpVec> rows;
    for (std::size_t j = 0; j + 2 <= k; ++j) {
        std::size_t left = 1, right = 1;
        for (std::size_t t = 0; t < j; ++t) left *= n;
        for (std::size_t t = 0; t < k - 2 - j; ++t) right *= n;
        for (const FpVec& beta : gens)
            for (std::size_t a = 0; a < left; ++a)
                for (std::size_t c = 0; c < right; ++c) {
                    FpVec vec(M.p, total);
                    for (std::size_t s = 0; s < n; ++s)
                        for (std::size_t t = 0; t < n; ++t) {
                            uint8_t x = beta[s * n + t];
                            if (x) vec.coords[((a * n + s) * n + t) * right + c] = x;
                        }
                    rows.push_back(std::move(vec));
                }
    }
    if (rows.empty()) return 0;
    return rank(FpMat::from_rows(M.p, total, rows));
}

std::vector<std::size_t> oracle_dims(const AugBilinearMap& M, std::size_t dmax) {
    std::vector<std::size_t> dims{1};
    if (dmax >= 1) dims.push_back(M.n);
    for (std::size_t k = 2; k <= dmax; ++k) {
        std::size_t total = 1;
        for (std::size_t t = 0; t < k; ++t) total *= M.n;
        dims.push_back(total - oracle_ideal_dim(M, k));
    }
    return dims;
}

AugBilinearMap graph_map(const char* text, uint8_t p) {
    return graph_bilinear(parse_graph(text), p);
}

}  // namespace

TEST_CASE("pure span of the edgeless and single-edge maps") {
    auto edgeless = graph_map("2\n", 2);
    CHECK(pure_kernel_span(edgeless).size() == 4);  // everything

    auto k2 = graph_map("2\n1 2\n", 2);
    auto span = pure_kernel_span(k2);
    CHECK(span.size() == 3);
    RrefBasis chk(2, 4);
    for (const auto& b : span) chk.insert(b);
    CHECK(chk.contains(FpVec(2, {1, 0, 0, 0})));  // v1⊗v1
    CHECK(chk.contains(FpVec(2, {0, 0, 0, 1})));  // v2⊗v2
    CHECK(chk.contains(FpVec(2, {0, 1, 1, 0})));  // v1⊗v2 + v2⊗v1
}

TEST_CASE("pure span equals the full kernel for graph maps") {
    for (uint8_t p : {2, 3}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            GraphEnumerator en(n, false);
            while (auto g = en.next()) {
                auto M = graph_bilinear(*g, p);
                auto span = pure_kernel_span(M);
                CHECK(span.size() == n * n - g->edges.size());
                // containment in the kernel of V⊗V -> W, coordinatewise
                FpMat B = products_matrix(M);
                for (const auto& b : span) CHECK(mul(B, b).is_zero());
            }
        }
    }
}

TEST_CASE("hull dims for the single edge and the triangle") {
    auto k2 = graph_map("2\n1 2\n", 2);
    auto h2 = hull_dims(k2, 3);
    CHECK(h2.dims == std::vector<std::size_t>{1, 2, 1, 0});
    CHECK(oracle_dims(k2, 3) == h2.dims);

    auto k3 = graph_map("3\n1 2\n1 3\n2 3\n", 2);
    auto h3 = hull_dims(k3, 3);
    CHECK(h3.dims == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(oracle_dims(k3, 3) == h3.dims);

    auto lone = graph_map("1\n", 3);
    CHECK(hull_dims(lone, 3).dims == std::vector<std::size_t>{1, 1, 0, 0});
}

TEST_CASE("hull dims match the rank oracle on small maps") {
    for (uint8_t p : {2, 3}) {
        GraphEnumerator en(3, false);
        while (auto g = en.next()) {
            auto M = graph_bilinear(*g, p);
            auto h = hull_dims(M, 3);
            CHECK(h.dims == oracle_dims(M, 3));
            CHECK(h.dims[2] == M.n * M.n - pure_kernel_span(M).size());
        }
    }
}

TEST_CASE("pure span and functor round trip at the larger primes") {
    // guards cap these at n <= 3 for p = 5 and n <= 2 for p = 7
    for (auto [p, nmax] : {std::pair<uint8_t, std::size_t>{5, 3}, {7, 2}}) {
        for (std::size_t n = 1; n <= nmax; ++n) {
            GraphEnumerator en(n, false);
            while (auto g = en.next()) {
                auto M = graph_bilinear(*g, p);
                CHECK(pure_kernel_span(M).size() == n * n - g->edges.size());
                auto r = functor_F_of_G(M);
                CHECK(r.pure_equals_kernel);
                REQUIRE(r.iso);
                CHECK(check_monomorphism(*r.iso));
            }
        }
    }
}

TEST_CASE("removing an edge never increases hull dims") {
    for (uint8_t p : {2, 3}) {
        GraphEnumerator en(4, false);
        while (auto g = en.next()) {
            if (g->edges.empty()) continue;
            auto full = hull_dims(graph_bilinear(*g, p), 3);
            for (std::size_t drop = 0; drop < g->edges.size(); ++drop) {
                auto fewer = g->edges;
                fewer.erase(fewer.begin() + static_cast<long>(drop));
                auto sub = SimplicialGraph::from_edges(g->n, fewer);
                auto hs = hull_dims(graph_bilinear(sub, p), 3);
                for (std::size_t k = 2; k <= 3; ++k)
                    CHECK(hs.dims[k] <= full.dims[k]);
            }
        }
    }
}

TEST_CASE("functor round trip reproduces graph maps") {
    for (uint8_t p : {2, 3}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            GraphEnumerator en(n, false);
            while (auto g = en.next()) {
                auto M = graph_bilinear(*g, p);
                auto r = functor_F_of_G(M);
                CHECK(r.map.m == g->edges.size());
                CHECK(validate(r.map).empty());
                CHECK(r.pure_equals_kernel);
                REQUIRE(r.iso);
                CHECK(check_monomorphism(*r.iso));      // square iso onto M
                CHECK(rank(r.iso->f2) == M.m);
            }
        }
    }
}

TEST_CASE("functor on degenerate and odd-p maps") {
    auto zero = AugBilinearMap::zero(2, 1, 0);
    auto r = functor_F_of_G(zero);
    CHECK(r.map.m == 0);

    // a zero map into a nonzero W is not surjective: no isomorphism
    auto zero1 = AugBilinearMap::zero(2, 1, 1);
    auto r1 = functor_F_of_G(zero1);
    CHECK(r1.map.m == 0);
    CHECK(r1.pure_equals_kernel);
    CHECK(!r1.iso);

    auto k2p3 = graph_map("2\n1 2\n", 3);
    auto r3 = functor_F_of_G(k2p3);
    CHECK(r3.map.m == 1);
    REQUIRE(r3.iso);
    // the induced product table matches the source through f2
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(mul(r3.iso->f2, r3.map.b(i, j)) == k2p3.b(i, j));
}

TEST_CASE("hull map of an augmented map with nonzero eps validates") {
    AugBilinearMap M = AugBilinearMap::zero(2, 1, 1);
    M.b(0, 0).set(0, 1);
    M.eps.set(0, 1);
    REQUIRE(validate(M).empty());
    auto r = functor_F_of_G(M);
    CHECK(validate(r.map).empty());
    CHECK(r.map.eps == M.eps);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(hull_dims(AugBilinearMap::zero(2, 2, 0), 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(pure_kernel_span(AugBilinearMap::zero(2, 9, 0)),
                    std::invalid_argument);
}
