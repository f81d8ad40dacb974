#include "qgk/presentations.hpp"

#include <stdexcept>

#include "doctest.h"
#include "qgk/parse_error.hpp"
#include "test_rng.hpp"

using namespace qgk;

namespace {

Word random_word(TestRng& rng, std::size_t n, std::size_t len) {
    std::vector<std::pair<unsigned, long long>> ls;
    for (std::size_t t = 0; t < len; ++t) {
        unsigned g = static_cast<unsigned>(rng.below(n));
        long long e = static_cast<long long>(rng.below(5)) - 2;
        if (e == 0) e = 3;
        ls.emplace_back(g, e);
    }
    return Word::from_letters(std::move(ls));
}

}  // namespace

TEST_CASE("presentation parsing") {
    auto P = parse_presentation("gens x y ; rel [x,y] ;");
    CHECK(P.gens == std::vector<std::string>{"x", "y"});
    REQUIRE(P.relators.size() == 1);
    // commutator sugar expands to x^-1 y^-1 x y
    CHECK(P.relators[0].letters ==
          std::vector<std::pair<unsigned, long long>>{
              {0, -1}, {1, -1}, {0, 1}, {1, 1}});

    auto Q = parse_presentation("gens x; rel x^2;");
    CHECK(Q.relators[0].letters ==
          std::vector<std::pair<unsigned, long long>>{{0, 2}});

    CHECK_THROWS_AS(parse_presentation("gens x; rel [x,z];"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens x; rel ;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens x; rel x^0;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens x x; rel x;"), ParseError);

    // nesting and longest-name matching
    auto R = parse_presentation("gens a ab; rel [ab,[a,ab]]a^-2;");
    CHECK(R.gens.size() == 2);
    auto W = parse_word("aba", R.gens);
    CHECK(W.letters == std::vector<std::pair<unsigned, long long>>{{1, 1}, {0, 1}});
}

TEST_CASE("collection basics") {
    Word comm = commutator(Word::from_letters({{0, 1}}), Word::from_letters({{1, 1}}));
    for (uint8_t p : {2, 3, 5}) {
        auto nf = collect_mod_s3(comm, 2, p);
        CHECK(nf.c == std::vector<uint16_t>{0, 0});
        CHECK(nf.dval(0, 1) == 1);

        Word xp = Word::from_letters({{0, p}});
        auto nfp = collect_mod_s3(xp, 2, p);
        CHECK(nfp.c[0] == p);
        CHECK(nfp.c[1] == 0);
        CHECK(nfp.dval(0, 1) == 0);

        // x1 x2 x1^-1 x2^-1, the reversed commutator
        Word rev = Word::from_letters({{0, 1}, {1, 1}, {0, -1}, {1, -1}});
        auto nfr = collect_mod_s3(rev, 2, p);
        CHECK(nfr.c == std::vector<uint16_t>{0, 0});
        CHECK(nfr.dval(0, 1) == 1);
    }
}

TEST_CASE("magnus expansion basics") {
    for (uint8_t p : {2, 3}) {
        Word comm =
            commutator(Word::from_letters({{0, 1}}), Word::from_letters({{1, 1}}));
        auto mg = magnus_degree2(comm, 2, p);
        CHECK(mg.e == std::vector<uint16_t>{0, 0});
        CHECK(mg.eps2[0 * 2 + 1] == 1);
        CHECK(mg.eps2[1 * 2 + 0] == p - 1);

        auto gen = magnus_degree2(Word::from_letters({{0, 1}}), 2, p);
        CHECK(gen.e == std::vector<uint16_t>{1, 0});
        CHECK(gen.eps2 == std::vector<uint8_t>(4, 0));

        auto sq = magnus_degree2(Word::from_letters({{0, 2}}), 1, p);
        CHECK(sq.e[0] == 2);
        CHECK(sq.eps2[0] == 1);  // binomial C(2,2)
    }
}

TEST_CASE("collection agrees with the magnus oracle") {
    TestRng rng(41);
    for (int t = 0; t < 10000; ++t) {
        uint8_t p = (t % 2 == 0) ? 2 : 3;
        std::size_t n = 1 + rng.below(4);
        Word w = random_word(rng, n, 1 + rng.below(20));
        auto nf = collect_mod_s3(w, n, p);
        auto mg = magnus_degree2(w, n, p);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(nf.c[i] % p == mg.e[i] % p);  // both are the exponent sums
        // d_ij = eps2_ij - e_i e_j mod p, for every word
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                long long expect =
                    (mg.eps2[i * n + j] -
                     static_cast<long long>(mg.e[i] % p) * (mg.e[j] % p)) %
                    p;
                if (expect < 0) expect += p;
                CHECK(nf.dval(i, j) == expect);
            }
    }
}

TEST_CASE("collection is a homomorphism with inverses") {
    TestRng rng(42);
    for (int t = 0; t < 1000; ++t) {
        uint8_t p = (t % 2 == 0) ? 2 : 3;
        std::size_t n = 1 + rng.below(4);
        Word a = random_word(rng, n, 1 + rng.below(12));
        Word b = random_word(rng, n, 1 + rng.below(12));
        auto na = collect_mod_s3(a, n, p);
        auto nb = collect_mod_s3(b, n, p);
        CHECK(collect_mod_s3(concat(a, b), n, p) == nf_mul(na, nb));
        CHECK(collect_mod_s3(inverse(a), n, p) == nf_inv(na));
        CHECK(nf_mul(na, nf_inv(na)) == NormalFormS3::zero(p, n));
    }
}

TEST_CASE("relator coordinates") {
    Word comm = commutator(Word::from_letters({{0, 1}}), Word::from_letters({{1, 1}}));
    auto rc = relator_coordinates(comm, 2, 3);
    CHECK(rc.a.is_zero());
    CHECK(rc.arel == std::vector<uint8_t>{1});

    Word xp = Word::from_letters({{0, 5}});
    auto rp = relator_coordinates(xp, 2, 5);
    CHECK(rp.a == FpVec(5, {1, 0}));

    Word bare = Word::from_letters({{0, 1}});
    CHECK_THROWS_AS(relator_coordinates(bare, 2, 3), std::invalid_argument);
}

TEST_CASE("cup product of the rank-one relator x^2") {
    auto P = parse_presentation("gens x; rel x^2;");
    auto M = presentation_cup_product(P, 2);
    CHECK(M.n == 1);
    CHECK(M.m == 1);
    CHECK(M.b(0, 0) == FpVec(2, {1}));
    CHECK(M.eps == FpVec(2, {1}));
    CHECK(validate(M).empty());
}

TEST_CASE("presentation duality with graph maps") {
    for (uint8_t p : {2, 3}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            GraphEnumerator en(n, false);
            while (auto g = en.next()) {
                auto from_pres = presentation_cup_product(raag_presentation(*g), p);
                auto from_graph = graph_bilinear(*g, p);
                CHECK(equal(from_pres, from_graph));
                CHECK(write_map(from_pres) == write_map(from_graph));
            }
        }
    }
}

TEST_CASE("presentation duality at the larger primes") {
    for (uint8_t p : {5, 7}) {
        for (const char* text : {"2\n1 2\n", "4\n1 2\n2 3\n3 4\n"}) {
            auto g = parse_graph(text);
            CHECK(equal(presentation_cup_product(raag_presentation(g), p),
                        graph_bilinear(g, p)));
        }
    }
}

TEST_CASE("cup product error paths") {
    // dependent relators cannot certify minimality
    auto dup = parse_presentation("gens x y; rel [x,y]; rel [x,y];");
    CHECK_THROWS_AS(presentation_cup_product(dup, 2), std::invalid_argument);

    // diagonal value outside the span of the eps system
    auto no_eps = parse_presentation("gens x y; rel [x,y]; rel y^2;");
    CHECK_THROWS_WITH_AS(presentation_cup_product(no_eps, 2),
                         "no augmentation exists for this map",
                         std::invalid_argument);

    // at odd p diagonals vanish, eps = 0, and the analogue validates
    auto odd = parse_presentation("gens x y; rel [x,y]; rel y^3;");
    auto M = presentation_cup_product(odd, 3);
    CHECK(validate(M).empty());
    CHECK(M.eps.is_zero());
    CHECK(M.b(1, 1).is_zero());
}

TEST_CASE("raag presentations") {
    auto k2 = raag_presentation(parse_graph("2\n1 2\n"));
    CHECK(k2.gens == std::vector<std::string>{"x1", "x2"});
    REQUIRE(k2.relators.size() == 1);
    CHECK(k2.relators[0].letters ==
          std::vector<std::pair<unsigned, long long>>{
              {0, -1}, {1, -1}, {0, 1}, {1, 1}});

    CHECK(raag_presentation(parse_graph("2\n")).relators.empty());
    CHECK(raag_presentation(parse_graph("4\n1 2\n2 3\n3 4\n1 4\n")).relators.size() ==
          4);
}
