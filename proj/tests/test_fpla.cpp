#include "qgk/fpla.hpp"

#include <set>

#include "doctest.h"
#include "test_rng.hpp"

using namespace qgk;

namespace {

FpMat random_mat(TestRng& rng, uint8_t p, std::size_t rows, std::size_t cols) {
    FpMat m(p, rows, cols);
    for (auto& x : m.a) x = static_cast<uint8_t>(rng.below(p));
    return m;
}

FpVec random_vec(TestRng& rng, uint8_t p, std::size_t dim) {
    FpVec v(p, dim);
    for (auto& x : v.coords) x = static_cast<uint8_t>(rng.below(p));
    return v;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(FpMat::identity(2, 2)) == 2);

    FpMat ones(2, 2, 2);
    ones.a = {1, 1, 1, 1};
    CHECK(rank(ones) == 1);

    CHECK(rank(FpMat(3, 3, 3)) == 0);
}

TEST_CASE("solve basics and pivot convention") {
    auto x = solve(FpMat::identity(2, 2), FpVec(2, {1, 0}));
    REQUIRE(x);
    CHECK(*x == FpVec(2, {1, 0}));

    FpMat row(2, 1, 2);
    row.a = {1, 1};
    auto y = solve(row, FpVec(2, {1}));
    REQUIRE(y);
    CHECK(*y == FpVec(2, {1, 0}));  // free variable forced to zero

    FpMat z(2, 1, 1);
    CHECK(!solve(z, FpVec(2, {1})));
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(FpMat::identity(2, 2)).empty());

    FpMat row(2, 1, 2);
    row.a = {1, 1};
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == FpVec(2, {1, 1}));

    CHECK(kernel_basis(FpMat(3, 2, 3)).size() == 3);
}

TEST_CASE("rank equals rank of transpose, kernel dimension") {
    TestRng rng(11);
    for (int t = 0; t < 200; ++t) {
        uint8_t p = rng.pick_prime();
        auto m = random_mat(rng, p, 1 + rng.below(5), 1 + rng.below(5));
        std::size_t r = rank(m);
        CHECK(r == rank(transpose(m)));
        CHECK(kernel_basis(m).size() + r == m.cols);
        for (const FpVec& v : kernel_basis(m)) CHECK(mul(m, v).is_zero());
    }
}

TEST_CASE("solve agrees with exhaustive search") {
    TestRng rng(12);
    for (int t = 0; t < 120; ++t) {
        uint8_t p = rng.pick_prime();
        std::size_t cols = 1 + rng.below(4), rows = 1 + rng.below(4);
        auto A = random_mat(rng, p, rows, cols);
        auto b = random_vec(rng, p, rows);
        auto x = solve(A, b);
        bool any = false;
        FpVec v(p, cols);
        do {
            if (mul(A, v) == b) any = true;
        } while (next_vec(v));
        if (x) {
            CHECK(mul(A, *x) == b);
            CHECK(any);
        } else {
            CHECK(!any);
        }
    }
}

TEST_CASE("affine_intersect basics") {
    FpVec o(2, {0, 0});
    auto hit = affine_intersect(o, {FpVec(2, {1, 0})}, FpVec(2, {0, 1}),
                                {FpVec(2, {0, 1})});
    REQUIRE(hit);
    CHECK(*hit == o);

    CHECK(!affine_intersect(FpVec(2, {1, 0}), {}, FpVec(2, {0, 0}), {}));
}

TEST_CASE("affine_intersect agrees with coset enumeration") {
    TestRng rng(13);
    for (int t = 0; t < 60; ++t) {
        uint8_t p = (t % 2 == 0) ? 2 : 3;
        std::size_t dim = 1 + rng.below(6);
        auto c1 = random_vec(rng, p, dim);
        auto c2 = random_vec(rng, p, dim);
        std::vector<FpVec> s1, s2;
        for (std::size_t i = 0; i < rng.below(3); ++i)
            s1.push_back(random_vec(rng, p, dim));
        for (std::size_t i = 0; i < rng.below(3); ++i)
            s2.push_back(random_vec(rng, p, dim));

        auto in_coset = [&](const FpVec& x, const FpVec& c,
                            const std::vector<FpVec>& span) {
            // brute force over all coefficient combinations
            std::size_t combos = 1;
            for (std::size_t i = 0; i < span.size(); ++i) combos *= p;
            for (std::size_t k = 0; k < combos; ++k) {
                FpVec pt = c;
                std::size_t rem = k;
                for (const FpVec& s : span) {
                    add_scaled(pt, static_cast<uint8_t>(rem % p), s);
                    rem /= p;
                }
                if (pt == x) return true;
            }
            return false;
        };

        auto got = affine_intersect(c1, s1, c2, s2);
        bool any = false;
        FpVec v(p, dim);
        do {
            if (in_coset(v, c1, s1) && in_coset(v, c2, s2)) any = true;
        } while (next_vec(v));
        if (got) {
            CHECK(in_coset(*got, c1, s1));
            CHECK(in_coset(*got, c2, s2));
            CHECK(any);
        } else {
            CHECK(!any);
        }
    }
}

TEST_CASE("vector enumeration is lexicographic") {
    FpVec v(3, 2);
    std::size_t idx = 0;
    do {
        CHECK(v == vec_from_index(3, 2, idx));
        CHECK(index_of_vec(v) == idx);
        ++idx;
    } while (next_vec(v));
    CHECK(idx == 9);
    CHECK(lex_less(vec_from_index(3, 2, 3), vec_from_index(3, 2, 4)));
}

TEST_CASE("RrefBasis spans are order independent") {
    TestRng rng(14);
    for (int t = 0; t < 60; ++t) {
        uint8_t p = rng.pick_prime();
        std::size_t dim = 1 + rng.below(6);
        std::vector<FpVec> vecs;
        for (int i = 0; i < 5; ++i) vecs.push_back(random_vec(rng, p, dim));

        RrefBasis fwd(p, dim), rev(p, dim);
        for (const auto& v : vecs) fwd.insert(v);
        for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) rev.insert(*it);
        CHECK(fwd.basis() == rev.basis());
        for (const auto& v : vecs) CHECK(fwd.contains(v));

        // span dim matches matrix rank
        CHECK(fwd.dim_span() == rank(FpMat::from_rows(p, dim, vecs)));
    }
}
