#include "qgk/bilform.hpp"

#include "doctest.h"
#include "qgk/graphs.hpp"
#include "qgk/parse_error.hpp"
#include "test_rng.hpp"

using namespace qgk;

namespace {

SimplicialGraph path4() { return parse_graph("4\n1 2\n2 3\n3 4\n"); }

// exhaustive check of every axiom consequence, the oracle behind validate
bool axioms_hold_everywhere(const AugBilinearMap& M) {
    FpVec v(M.p, M.n);
    do {
        if (!eval(M, v, M.eps + v).is_zero()) return false;
        FpVec bvv = eval(M, v, v);
        if (eval(M, v, M.eps) != bvv) return false;
        if (eval(M, M.eps, v) != bvv) return false;
        FpVec u(M.p, M.n);
        do {
            if (eval(M, v, u) != -eval(M, u, v)) return false;
        } while (next_vec(u));
    } while (next_vec(v));
    return true;
}

// Random Gram, skew-completed; at p = 2 a random eps is drawn and the
// table is repaired so that b(v, eps+v) = 0 holds: within the eps
// support the row sums must vanish (the last support column absorbs the
// defect), diagonals off the support are forced to b(v_i, eps) and free
// on it.
AugBilinearMap random_valid_map(TestRng& rng, uint8_t p, std::size_t n,
                                std::size_t m) {
    AugBilinearMap M = AugBilinearMap::zero(p, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FpVec w(p, m);
            for (auto& c : w.coords) c = static_cast<uint8_t>(rng.below(p));
            M.b(i, j) = w;
            M.b(j, i) = -w;
        }
    if (p == 2) {
        for (auto& c : M.eps.coords) c = static_cast<uint8_t>(rng.below(2));
        std::vector<std::size_t> supp;
        for (std::size_t i = 0; i < n; ++i)
            if (M.eps[i]) supp.push_back(i);
        if (!supp.empty()) {
            std::size_t last = supp.back();
            for (std::size_t i : supp) {
                if (i == last) continue;
                FpVec s(p, m);
                for (std::size_t j : supp)
                    if (j != i && j != last) s = s + M.b(i, j);
                M.b(i, last) = s;
                M.b(last, i) = s;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (M.eps[i]) {
                FpVec d(p, m);
                for (auto& c : d.coords) c = static_cast<uint8_t>(rng.below(2));
                M.b(i, i) = d;
            } else {
                FpVec s(p, m);
                for (std::size_t j : supp) s = s + M.b(i, j);
                M.b(i, i) = s;
            }
        }
    }
    return M;
}

}  // namespace

TEST_CASE("validate accepts graph maps") {
    for (uint8_t p : {2, 3}) {
        auto M = graph_bilinear(path4(), p);
        CHECK(validate(M).empty());
        CHECK(axioms_hold_everywhere(M));
    }
}

TEST_CASE("validate rejects nonzero eps at odd p") {
    auto M = AugBilinearMap::zero(3, 2, 1);
    M.eps.set(0, 1);
    auto v = validate(M);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::EpsOrder);
}

TEST_CASE("validate accepts the rank-one augmented map at p=2") {
    auto M = AugBilinearMap::zero(2, 1, 1);
    M.b(0, 0).set(0, 1);
    M.eps.set(0, 1);
    CHECK(validate(M).empty());
    CHECK(axioms_hold_everywhere(M));  // all 2 vectors of V
}

TEST_CASE("validate produces evaluable witnesses") {
    // break skew-symmetry
    auto M = AugBilinearMap::zero(3, 2, 1);
    M.b(0, 1).set(0, 1);
    auto v = validate(M);
    REQUIRE(!v.empty());
    CHECK(v[0].kind == Violation::Kind::NotSkew);
    CHECK(M.b(v[0].j, v[0].i) != -M.b(v[0].i, v[0].j));

    // break the diagonal axiom at p=2
    auto N = AugBilinearMap::zero(2, 2, 1);
    N.b(0, 0).set(0, 1);
    auto w = validate(N);
    REQUIRE(!w.empty());
    CHECK(w[0].kind == Violation::Kind::AxiomI);
    FpVec e0(2, {1, 0});
    CHECK(eval(N, e0, N.eps + e0) != FpVec(2, 1));

    // malformed dimensions
    auto B = AugBilinearMap::zero(2, 2, 1);
    B.gram.pop_back();
    auto mv = validate(B);
    REQUIRE(!mv.empty());
    CHECK(mv[0].kind == Violation::Kind::Malformed);
}

TEST_CASE("validate empty implies all axioms, exhaustively") {
    TestRng rng(21);
    for (int t = 0; t < 100; ++t) {
        uint8_t p = rng.pick_prime();
        std::size_t n = 1 + rng.below(3), m = rng.below(3);
        auto M = random_valid_map(rng, p, n, m);
        REQUIRE(validate(M).empty());
        CHECK(axioms_hold_everywhere(M));
        if (p != 2) CHECK(M.eps.is_zero());
    }
}

TEST_CASE("is_surjective") {
    CHECK(is_surjective(graph_bilinear(path4(), 2)));
    CHECK(!is_surjective(AugBilinearMap::zero(2, 2, 1)));
    CHECK(is_surjective(AugBilinearMap::zero(2, 2, 0)));
}

TEST_CASE("monomorphism checks") {
    auto M = graph_bilinear(path4(), 2);
    Morphism id{FpMat::identity(2, 4), FpMat::identity(2, 3), M, M};
    CHECK(!morphism_violation(id));
    CHECK(check_monomorphism(id));

    // the zero morphism is a morphism (eps = 0 here) but not mono
    Morphism zero{FpMat(2, 4, 4), FpMat(2, 3, 3), M, M};
    CHECK(!morphism_violation(zero));
    CHECK(!check_monomorphism(zero));

    // zero W-component under the identity breaks the square: reported
    // before any rank check
    Morphism bad{FpMat::identity(2, 4), FpMat(2, 3, 3), M, M};
    CHECK(morphism_violation(bad));
    CHECK_THROWS_AS(check_monomorphism(bad), std::invalid_argument);

    // map into the free product: injective on both sides
    auto MM = free_product(M, M);
    FpMat f1(2, 8, 4), f2(2, 6, 3);
    for (std::size_t i = 0; i < 4; ++i) f1.set(i, i, 1);
    for (std::size_t i = 0; i < 3; ++i) f2.set(i, i, 1);
    Morphism inc{f1, f2, M, MM};
    CHECK(check_monomorphism(inc));
}

TEST_CASE("morphism composition stays a morphism") {
    auto M = graph_bilinear(path4(), 3);
    auto MM = free_product(M, M);
    FpMat f1(3, 8, 4), f2(3, 6, 3);
    for (std::size_t i = 0; i < 4; ++i) f1.set(i, i, 1);
    for (std::size_t i = 0; i < 3; ++i) f2.set(i, i, 1);
    Morphism inc{f1, f2, M, MM};
    Morphism idm{FpMat::identity(3, 4), FpMat::identity(3, 3), M, M};
    auto c = compose(inc, idm);
    CHECK(!morphism_violation(c));
    CHECK(check_monomorphism(c));
}

TEST_CASE("free_product of graph maps is the disjoint union graph map") {
    auto k2 = parse_graph("2\n1 2\n");
    auto two_k2 = parse_graph("4\n1 2\n3 4\n");
    CHECK(equal(free_product(graph_bilinear(k2, 2), graph_bilinear(k2, 2)),
                graph_bilinear(two_k2, 2)));

    auto leaf = AugBilinearMap::zero(2, 1, 0);
    auto ll = free_product(leaf, leaf);
    CHECK(ll.n == 2);
    CHECK(ll.m == 0);
    CHECK(validate(ll).empty());

    auto p3 = parse_graph("3\n1 2\n2 3\n");
    auto p3_k1 = parse_graph("4\n1 2\n2 3\n");
    CHECK(equal(free_product(graph_bilinear(p3, 3),
                             graph_bilinear(parse_graph("1\n"), 3)),
                graph_bilinear(p3_k1, 3)));
}

TEST_CASE("free_product rejects nonzero eps") {
    auto M = AugBilinearMap::zero(2, 1, 1);
    M.b(0, 0).set(0, 1);
    M.eps.set(0, 1);
    REQUIRE(validate(M).empty());
    CHECK_THROWS_AS(free_product(M, M), std::invalid_argument);
}

TEST_CASE("free_product output validates and tracks surjectivity") {
    TestRng rng(22);
    for (int t = 0; t < 50; ++t) {
        uint8_t p = rng.pick_prime();
        auto A = random_valid_map(rng, p, 1 + rng.below(3), 1 + rng.below(2));
        auto B = random_valid_map(rng, p, 1 + rng.below(3), 1 + rng.below(2));
        if (p == 2) {  // free_product requires eps = 0
            A.eps = FpVec(p, A.n);
            for (std::size_t i = 0; i < A.n; ++i) A.b(i, i) = FpVec(p, A.m);
            B.eps = FpVec(p, B.n);
            for (std::size_t i = 0; i < B.n; ++i) B.b(i, i) = FpVec(p, B.m);
        }
        auto R = free_product(A, B);
        CHECK(validate(R).empty());
        CHECK(is_surjective(R) == (is_surjective(A) && is_surjective(B)));
    }
}

TEST_CASE("equal and permuted_equal") {
    auto M = graph_bilinear(path4(), 2);
    CHECK(equal(M, M));
    CHECK(!equal(graph_bilinear(parse_graph("2\n1 2\n"), 2),
                 AugBilinearMap::zero(2, 2, 1)));

    // relabeling 1<->4, 2<->3 is an automorphism of the 4-path
    CHECK(permuted_equal(M, M, {3, 2, 1, 0}));
    // rotating the path is not
    CHECK(!permuted_equal(M, M, {1, 2, 3, 0}));
    // identity always works
    CHECK(permuted_equal(M, M, {0, 1, 2, 3}));
}

TEST_CASE("map serialization round trip and rejection") {
    auto M = graph_bilinear(path4(), 2);
    std::string text = write_map(M);
    CHECK(equal(parse_map(text), M));

    // canonical bytes: reserializing parses back to the same text
    CHECK(write_map(parse_map(text)) == text);

    std::string dup = text + "b 1 1 0 0 0\n";
    CHECK_THROWS_AS(parse_map(dup), ParseError);

    std::string missing = text.substr(0, text.rfind("b "));
    CHECK_THROWS_AS(parse_map(missing), ParseError);

    CHECK_THROWS_AS(parse_map("p 4\ndimV 0\ndimW 0\neps\n"), ParseError);
    CHECK_THROWS_AS(parse_map("p 2\ndimV 100000\ndimW 0\neps\n"), ParseError);
}
