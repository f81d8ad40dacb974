#include "qgk/graphs.hpp"

#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qgk/parse_error.hpp"

using namespace qgk;

namespace {

bool is_tree(const DecomposeResult& r) {
    return std::holds_alternative<ConstructionTree>(r);
}

// independent isomorphism classification: explicit permutation search
bool isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<std::size_t> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges)
            if (!b.adjacent(perm[e.first], perm[e.second])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("parse_graph") {
    auto l3 = parse_graph("4\n1 2\n2 3\n3 4\n");
    CHECK(l3.n == 4);
    CHECK(l3.edges ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});

    auto single = parse_graph("1\n");
    CHECK(single.n == 1);
    CHECK(single.edges.empty());

    CHECK_THROWS_AS(parse_graph("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1 4\n"), ParseError);

    auto commented = parse_graph("# header\n3\n1 2 # edge\n# trailing\n");
    CHECK(commented.edges.size() == 1);

    CHECK_THROWS_AS(parse_graph("4000\n"), ParseError);
}

TEST_CASE("find_forbidden on the named graphs") {
    auto l3 = parse_graph("4\n1 2\n2 3\n3 4\n");
    auto w = find_forbidden(l3);
    REQUIRE(w);
    CHECK(w->kind == ForbiddenWitness::Kind::L3);
    CHECK(w->vertices == std::array<std::size_t, 4>{0, 1, 2, 3});
    CHECK(verify_witness(l3, *w));

    auto c4 = parse_graph("4\n1 2\n2 3\n3 4\n1 4\n");
    auto wc = find_forbidden(c4);
    REQUIRE(wc);
    CHECK(wc->kind == ForbiddenWitness::Kind::C4);
    CHECK(wc->vertices == std::array<std::size_t, 4>{0, 1, 2, 3});
    CHECK(verify_witness(c4, *wc));

    auto k4 = parse_graph("4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(!find_forbidden(k4));
}

TEST_CASE("decompose structure") {
    auto single = decompose(parse_graph("1\n"));
    REQUIRE(is_tree(single));
    auto t = std::get<ConstructionTree>(single);
    CHECK(t.kind == ConstructionTree::Kind::Leaf);
    CHECK(t.label == 0);

    // 3-path: center vertex is universal over the two endpoints
    auto p3 = decompose(parse_graph("3\n1 2\n2 3\n"));
    REQUIRE(is_tree(p3));
    auto c = std::get<ConstructionTree>(p3);
    CHECK(c.kind == ConstructionTree::Kind::Cone);
    CHECK(c.label == 1);
    REQUIRE(c.children.size() == 1);
    CHECK(c.children[0].kind == ConstructionTree::Kind::Free);
    CHECK(tree_vertex_order(c) == std::vector<std::size_t>{0, 2, 1});

    auto l3 = decompose(parse_graph("4\n1 2\n2 3\n3 4\n"));
    REQUIRE(!is_tree(l3));
    CHECK(std::get<ForbiddenWitness>(l3).kind == ForbiddenWitness::Kind::L3);
}

TEST_CASE("decompose and find_forbidden agree exhaustively (n <= 6)") {
    for (std::size_t n = 1; n <= 6; ++n) {
        GraphEnumerator en(n, false);
        while (auto g = en.next()) {
            bool forb = find_forbidden(*g).has_value();
            auto d = decompose(*g);
            CHECK(is_tree(d) == !forb);
            if (is_tree(d)) {
                auto order = tree_vertex_order(std::get<ConstructionTree>(d));
                std::set<std::size_t> labels(order.begin(), order.end());
                CHECK(order.size() == n);
                CHECK(labels.size() == n);  // leaf labels cover V exactly
            } else {
                CHECK(verify_witness(*g, std::get<ForbiddenWitness>(d)));
            }
        }
    }
}

TEST_CASE("graph_bilinear tables") {
    auto l3 = parse_graph("4\n1 2\n2 3\n3 4\n");
    auto M = graph_bilinear(l3, 2);
    CHECK(M.n == 4);
    CHECK(M.m == 3);
    CHECK(M.b(0, 1) == FpVec(2, {1, 0, 0}));
    CHECK(M.b(1, 2) == FpVec(2, {0, 1, 0}));
    CHECK(M.b(2, 3) == FpVec(2, {0, 0, 1}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!(j == i + 1 || i == j + 1)) CHECK(M.b(i, j).is_zero());

    CHECK(eval(M, FpVec(2, {0, 1, 1, 0}), FpVec(2, {1, 1, 0, 0})) ==
          FpVec(2, {1, 1, 0}));

    auto edgeless = graph_bilinear(parse_graph("2\n"), 5);
    CHECK(edgeless.m == 0);
    CHECK(validate(edgeless).empty());
}

TEST_CASE("graph maps validate and are surjective") {
    for (uint8_t p : {2, 3, 5}) {
        GraphEnumerator en(4, false);
        while (auto g = en.next()) {
            auto M = graph_bilinear(*g, p);
            CHECK(validate(M).empty());
            CHECK(is_surjective(M));
        }
    }
}

TEST_CASE("enumeration counts") {
    auto count = [](std::size_t n, bool iso) {
        GraphEnumerator en(n, iso);
        std::size_t c = 0;
        while (en.next()) ++c;
        return c;
    };
    CHECK(count(4, false) == 64);
    CHECK(count(5, false) == 1024);
    CHECK(count(4, true) == 11);
    CHECK(count(5, true) == 34);
    CHECK_THROWS_AS(GraphEnumerator(8, false), std::invalid_argument);
}

TEST_CASE("iso-class representatives match pairwise isomorphism testing") {
    // collect representatives at n = 4 and classify all 64 labeled graphs
    std::vector<SimplicialGraph> reps;
    GraphEnumerator en(4, true);
    while (auto g = en.next()) reps.push_back(*g);
    REQUIRE(reps.size() == 11);

    GraphEnumerator all(4, false);
    while (auto g = all.next()) {
        std::size_t hits = 0;
        for (const auto& r : reps)
            if (isomorphic(*g, r)) ++hits;
        CHECK(hits == 1);  // exactly one representative per graph
    }
}

TEST_CASE("canonical mask is an isomorphism invariant") {
    auto a = parse_graph("4\n1 2\n2 3\n3 4\n");
    auto b = parse_graph("4\n2 4\n1 3\n1 4\n");  // relabeled 4-path
    CHECK(isomorphic(a, b));
    CHECK(canonical_mask(a) == canonical_mask(b));
    auto c = parse_graph("4\n1 2\n2 3\n3 4\n1 4\n");
    CHECK(canonical_mask(a) != canonical_mask(c));
}
