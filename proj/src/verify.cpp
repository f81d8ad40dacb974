#include "qgk/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "qgk/graphs.hpp"
#include "qgk/hull.hpp"
#include "qgk/presentations.hpp"
#include "qgk/slot.hpp"
#include "qgk/tower.hpp"

namespace qgk::verify {

std::size_t worker_count() {
    if (const char* env = std::getenv("QGK_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return std::min<long>(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 16u);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::size_t threads = std::min(worker_count(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::string err_msg;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count;
                 i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    if (!failed.exchange(true)) {
                        std::lock_guard<std::mutex> lock(err_mutex);
                        err_msg = e.what();
                    }
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failed) throw std::runtime_error("worker failed: " + err_msg);
}

AugBilinearMap random_valid_map(Rng& rng, uint8_t p, std::size_t n,
                                std::size_t m) {
    AugBilinearMap M = AugBilinearMap::zero(p, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FpVec w(p, m);
            for (auto& c : w.coords) c = static_cast<uint8_t>(rng.below(p));
            M.b(i, j) = w;
            M.b(j, i) = -w;
        }
    if (p != 2) return M;

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
            for (auto& c : M.b(i, i).coords)
                c = static_cast<uint8_t>(rng.below(2));
        } else {
            FpVec s(p, m);
            for (std::size_t j : supp) s = s + M.b(i, j);
            M.b(i, i) = s;
        }
    }
    return M;
}

AugBilinearMap random_skew_map(Rng& rng, uint8_t p, std::size_t n,
                               std::size_t m) {
    AugBilinearMap M = AugBilinearMap::zero(p, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FpVec w(p, m);
            for (auto& c : w.coords) c = static_cast<uint8_t>(rng.below(p));
            M.b(i, j) = w;
            M.b(j, i) = -w;
        }
    if (p == 2)
        for (std::size_t i = 0; i < n; ++i)
            for (auto& c : M.b(i, i).coords)
                c = static_cast<uint8_t>(rng.below(2));
    return M;
}

// ---------------------------------------------------------------------------

namespace {

struct Outcome {
    bool ok = true;
    std::string msg;
};

CriterionResult aggregate(std::string name, const std::vector<Outcome>& items,
                          std::string pass_detail) {
    for (std::size_t i = 0; i < items.size(); ++i)
        if (!items[i].ok)
            return {std::move(name), CriterionResult::Status::Fail,
                    "item " + std::to_string(i) + ": " + items[i].msg};
    return {std::move(name), CriterionResult::Status::Pass,
            std::move(pass_detail)};
}

std::vector<std::pair<std::size_t, uint64_t>> labeled_masks(std::size_t nmax) {
    std::vector<std::pair<std::size_t, uint64_t>> jobs;
    for (std::size_t n = 1; n <= nmax; ++n) {
        uint64_t total = uint64_t(1) << edge_slot_count(n);
        for (uint64_t mask = 0; mask < total; ++mask) jobs.emplace_back(n, mask);
    }
    return jobs;
}

std::string describe_graph(const SimplicialGraph& g) {
    return "n=" + std::to_string(g.n) +
           " mask=" + std::to_string(mask_from_graph(g));
}

// shared by hull_dimensions: one-shot rank of the position-injected raw
// pure tensors, an independent route to the ideal dimensions
std::vector<std::size_t> brute_force_hull_dims(const AugBilinearMap& M,
                                               std::size_t dmax) {
    std::vector<FpVec> gens;
    FpVec v(M.p, M.n);
    do {
        FpVec u(M.p, M.n);
        do {
            if (eval(M, v, u).is_zero()) {
                FpVec t(M.p, M.n * M.n);
                for (std::size_t i = 0; i < M.n; ++i)
                    for (std::size_t j = 0; j < M.n; ++j)
                        t.coords[i * M.n + j] = fp_mul(M.p, v[i], u[j]);
                if (!t.is_zero()) gens.push_back(std::move(t));
            }
        } while (next_vec(u));
    } while (next_vec(v));

    std::vector<std::size_t> dims{1};
    if (dmax >= 1) dims.push_back(M.n);
    for (std::size_t k = 2; k <= dmax; ++k) {
        std::size_t total = 1;
        for (std::size_t t = 0; t < k; ++t) total *= M.n;
        std::vector<FpVec> rows;
        for (std::size_t j = 0; j + 2 <= k; ++j) {
            std::size_t left = 1, right = 1;
            for (std::size_t t = 0; t < j; ++t) left *= M.n;
            for (std::size_t t = 0; t < k - 2 - j; ++t) right *= M.n;
            for (const FpVec& beta : gens)
                for (std::size_t a = 0; a < left; ++a)
                    for (std::size_t c = 0; c < right; ++c) {
                        FpVec vec(M.p, total);
                        for (std::size_t s = 0; s < M.n; ++s)
                            for (std::size_t t = 0; t < M.n; ++t)
                                if (beta[s * M.n + t])
                                    vec.coords[((a * M.n + s) * M.n + t) * right +
                                               c] = beta[s * M.n + t];
                        rows.push_back(std::move(vec));
                    }
        }
        std::size_t r =
            rows.empty() ? 0 : rank(FpMat::from_rows(M.p, total, rows));
        dims.push_back(total - r);
    }
    return dims;
}

}  // namespace

CriterionResult slot_graph_equivalence(std::size_t nmax) {
    std::vector<SimplicialGraph> jobs;
    for (auto [n, mask] : labeled_masks(std::min<std::size_t>(nmax, 5)))
        jobs.push_back(graph_from_mask(n, mask));
    std::size_t labeled = jobs.size();
    if (nmax >= 6) {
        GraphEnumerator en(6, true);
        while (auto g = en.next()) jobs.push_back(*g);
    }

    std::vector<Outcome> res(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const SimplicialGraph& g = jobs[i];
        auto M = graph_bilinear(g, 2);
        SlotResult slot = has_common_slot(M);
        bool forbidden_free = !find_forbidden(g).has_value();
        bool decomposable =
            std::holds_alternative<ConstructionTree>(decompose(g));
        if (slot.has_slot != forbidden_free || forbidden_free != decomposable) {
            res[i] = {false, describe_graph(g) + ": slot=" +
                                 std::to_string(slot.has_slot) +
                                 " forbidden-free=" +
                                 std::to_string(forbidden_free) +
                                 " decomposable=" +
                                 std::to_string(decomposable)};
            return;
        }
        if (slot.witness && !verify_slot_witness(M, *slot.witness))
            res[i] = {false, describe_graph(g) + ": witness fails re-check"};
    });

    std::ostringstream detail;
    detail << jobs.size() << "/" << jobs.size() << " agree";
    if (nmax >= 6)
        detail << " (" << labeled << " labeled <=5, " << (jobs.size() - labeled)
               << " classes at n=6)";
    return aggregate("slot-graph-equivalence", res, detail.str());
}

CriterionResult line_counterexample() {
    auto M = graph_bilinear(parse_graph("4\n1 2\n2 3\n3 4\n"), 2);
    FpVec v(2, {0, 1, 1, 0}), u(2, {1, 1, 0, 0});
    FpVec v2(2, {1, 1, 1, 1}), u2(2, {0, 1, 0, 0});
    FpVec expect(2, {1, 1, 0});
    if (eval(M, v, u) != expect || eval(M, v2, u2) != expect)
        return {"line-counterexample", CriterionResult::Status::Fail,
                "quadruple values differ from (1,1,0)"};
    std::size_t candidates = 0;
    FpVec cand(2, 4);
    do {
        ++candidates;
        if (eval(M, v, cand) == expect && eval(M, v2, cand) == expect)
            return {"line-counterexample", CriterionResult::Status::Fail,
                    "a common slot exists"};
    } while (next_vec(cand));
    return {"line-counterexample", CriterionResult::Status::Pass,
            "b(v,u)=b(v',u')=(1,1,0); no slot among " +
                std::to_string(candidates) + " candidates"};
}

CriterionResult presentation_duality(const std::vector<uint8_t>& primes,
                                     std::size_t nmax, std::size_t nrand,
                                     uint64_t seed) {
    std::vector<std::pair<uint8_t, SimplicialGraph>> jobs;
    for (uint8_t p : primes)
        for (auto [n, mask] : labeled_masks(std::min<std::size_t>(nmax, 4)))
            jobs.emplace_back(p, graph_from_mask(n, mask));
    std::size_t exhaustive = jobs.size();
    if (nmax >= 5) {
        Rng rng(seed);
        std::vector<uint64_t> masks;
        for (std::size_t t = 0; t < nrand; ++t)
            masks.push_back(rng.below(uint64_t(1) << edge_slot_count(5)));
        for (uint8_t p : primes)
            for (uint64_t mask : masks)
                jobs.emplace_back(p, graph_from_mask(5, mask));
    }

    std::vector<Outcome> res(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        auto [p, g] = jobs[i];
        auto lhs = presentation_cup_product(raag_presentation(g), p);
        auto rhs = graph_bilinear(g, p);
        if (write_map(lhs) != write_map(rhs))
            res[i] = {false, "p=" + std::to_string(p) + " " + describe_graph(g) +
                                 ": maps differ"};
    });
    return aggregate("presentation-duality", res,
                     std::to_string(exhaustive) + " labeled + " +
                         std::to_string(jobs.size() - exhaustive) +
                         " random graphs byte-identical");
}

CriterionResult slot_oracle_agreement(const std::vector<uint8_t>& primes,
                                      std::size_t nmax, std::size_t nrand,
                                      uint64_t seed) {
    std::vector<std::pair<uint8_t, SimplicialGraph>> graph_jobs;
    for (uint8_t p : primes)
        for (auto [n, mask] : labeled_masks(std::min<std::size_t>(nmax, 4)))
            graph_jobs.emplace_back(p, graph_from_mask(n, mask));

    Rng rng(seed ^ 0x9e3779b9u);
    std::vector<AugBilinearMap> random_jobs;
    for (std::size_t t = 0; t < nrand; ++t) {
        uint8_t p = primes[t % primes.size()];
        random_jobs.push_back(
            random_valid_map(rng, p, 1 + rng.below(3), rng.below(4)));
    }

    std::vector<Outcome> res(graph_jobs.size() + random_jobs.size());
    parallel_for(res.size(), [&](std::size_t i) {
        AugBilinearMap M;
        std::string what;
        if (i < graph_jobs.size()) {
            M = graph_bilinear(graph_jobs[i].second, graph_jobs[i].first);
            what = "p=" + std::to_string(graph_jobs[i].first) + " " +
                   describe_graph(graph_jobs[i].second);
        } else {
            M = random_jobs[i - graph_jobs.size()];
            what = "random map " + std::to_string(i - graph_jobs.size());
        }
        auto naive = has_common_slot_naive(M);
        auto fast = has_common_slot(M);
        if (naive.has_slot != fast.has_slot) {
            res[i] = {false, what + ": deciders disagree"};
            return;
        }
        if (naive.witness && !verify_slot_witness(M, *naive.witness))
            res[i] = {false, what + ": naive witness fails re-check"};
        else if (fast.witness && !verify_slot_witness(M, *fast.witness))
            res[i] = {false, what + ": reduced witness fails re-check"};
    });
    return aggregate("slot-oracle-agreement", res,
                     std::to_string(graph_jobs.size()) + " graph maps + " +
                         std::to_string(random_jobs.size()) +
                         " random maps agree");
}

CriterionResult construction_round_trip(const std::vector<uint8_t>& primes,
                                        std::size_t nmax) {
    std::vector<std::pair<uint8_t, SimplicialGraph>> jobs;
    for (uint8_t p : primes)
        for (auto [n, mask] : labeled_masks(std::min<std::size_t>(nmax, 6)))
            jobs.emplace_back(p, graph_from_mask(n, mask));

    std::vector<Outcome> res(jobs.size());
    std::vector<uint8_t> decomposable(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t i) {
        auto [p, g] = jobs[i];
        auto d = decompose(g);
        if (!std::holds_alternative<ConstructionTree>(d)) return;
        decomposable[i] = 1;
        const auto& tree = std::get<ConstructionTree>(d);
        auto F = eval_tree(tree, p);
        if (!permuted_equal(F.map, graph_bilinear(g, p), tree_vertex_order(tree)))
            res[i] = {false, "p=" + std::to_string(p) + " " + describe_graph(g) +
                                 ": tree evaluation differs"};
    });
    std::size_t trees = 0;
    for (uint8_t d : decomposable) trees += d;
    return aggregate("construction-round-trip", res,
                     std::to_string(trees) + " of " +
                         std::to_string(jobs.size()) +
                         " graph/prime pairs decomposable, all round-trip");
}

CriterionResult extension_dimension_laws(const std::vector<uint8_t>& primes) {
    std::vector<Outcome> res(1);
    auto fail = [&](const std::string& msg) {
        res[0] = {false, msg};
    };
    std::size_t cases = 0;
    for (uint8_t p : primes) {
        std::vector<FieldData> bases;
        for (std::size_t d = 0; d <= 4 && res[0].ok; ++d)
            bases.push_back(
                extend_power_series(base_field(BaseFieldKind::Complex, p), d)
                    .field);
        if (p == 2) {
            bases.push_back(base_field(BaseFieldKind::Z2Ext, 2));
            bases.push_back(base_field(BaseFieldKind::Q2, 2));
        }
        for (const FieldData& K : bases) {
            for (std::size_t m = 0; m <= 5 && res[0].ok; ++m) {
                auto E = extend_power_series(K, m);
                std::size_t nV = K.map.n, nW = K.map.m;
                ++cases;
                std::string where = "p=" + std::to_string(p) +
                                    " dimV=" + std::to_string(nV) +
                                    " m=" + std::to_string(m);
                if (E.field.map.n != nV + m)
                    fail(where + ": dimV' wrong");
                else if (E.field.map.m != nW + m * nV + m * (m - 1) / 2)
                    fail(where + ": dimW' wrong");
                else if (!is_valid(E.field.map))
                    fail(where + ": extension does not validate");
                else if (!check_monomorphism(E.restriction))
                    fail(where + ": restriction not a monomorphism");
                else if (!(nV == 0 && m <= 2) && E.field.map.m < m)
                    fail(where + ": dimW' < m outside the exceptional cases");
            }
        }
        // the two exceptional pairs really fall below the bound
        auto c = base_field(BaseFieldKind::Complex, p);
        if (res[0].ok && extend_power_series(c, 1).field.map.m >= 1)
            fail("p=" + std::to_string(p) + ": (dimV=0,m=1) not exceptional");
        if (res[0].ok && extend_power_series(c, 2).field.map.m >= 2)
            fail("p=" + std::to_string(p) + ": (dimV=0,m=2) not exceptional");
    }
    return aggregate("extension-dimension-laws", res,
                     std::to_string(cases) + " (base,m) cases satisfy the laws");
}

CriterionResult hull_dimensions(const std::vector<uint8_t>& primes,
                                std::size_t nmax) {
    std::vector<std::pair<uint8_t, SimplicialGraph>> jobs;
    for (uint8_t p : primes)
        for (auto [n, mask] : labeled_masks(std::min<std::size_t>(nmax, 5)))
            jobs.emplace_back(p, graph_from_mask(n, mask));

    std::vector<Outcome> res(jobs.size() + 1);
    parallel_for(jobs.size(), [&](std::size_t i) {
        auto [p, g] = jobs[i];
        auto M = graph_bilinear(g, p);
        auto r = functor_F_of_G(M);
        std::string where = "p=" + std::to_string(p) + " " + describe_graph(g);
        if (r.map.m != g.edges.size())
            res[i] = {false, where + ": dim A2 != edge count"};
        else if (!r.pure_equals_kernel)
            res[i] = {false, where + ": pure span misses the kernel"};
        else if (!r.iso)
            res[i] = {false, where + ": no induced isomorphism"};
        else if (!check_monomorphism(*r.iso) || rank(r.iso->f2) != M.m)
            res[i] = {false, where + ": induced map is not an isomorphism"};
    });

    // named truncations against the brute-force rank oracle
    auto k2 = parse_graph("2\n1 2\n");
    auto k3 = parse_graph("3\n1 2\n1 3\n2 3\n");
    for (uint8_t p : primes) {
        auto h2 = hull_dims(graph_bilinear(k2, p), 3);
        auto h3 = hull_dims(graph_bilinear(k3, p), 3);
        if (h2.dims != std::vector<std::size_t>{1, 2, 1, 0} ||
            h2.dims != brute_force_hull_dims(graph_bilinear(k2, p), 3))
            res.back() = {false, "1-edge truncation mismatch at p=" +
                                     std::to_string(p)};
        if (h3.dims != std::vector<std::size_t>{1, 3, 3, 1} ||
            h3.dims != brute_force_hull_dims(graph_bilinear(k3, p), 3))
            res.back() = {false, "triangle truncation mismatch at p=" +
                                     std::to_string(p)};
    }
    return aggregate("hull-dimensions", res,
                     std::to_string(jobs.size()) +
                         " graph/prime pairs reproduce; truncations match "
                         "the rank oracle");
}

CriterionResult random_map_axiom_suite(const std::vector<uint8_t>& primes,
                                       std::size_t nmaps, std::size_t nskew,
                                       uint64_t seed) {
    Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::vector<AugBilinearMap> maps;
    for (std::size_t t = 0; t < nmaps; ++t) {
        uint8_t p = primes[t % primes.size()];
        maps.push_back(random_valid_map(rng, p, 1 + rng.below(4), rng.below(4)));
    }
    std::vector<AugBilinearMap> skews;
    for (std::size_t t = 0; t < nskew; ++t) {
        uint8_t p = primes[t % primes.size()];
        skews.push_back(random_skew_map(rng, p, 1 + rng.below(4), rng.below(4)));
    }

    std::vector<Outcome> res(maps.size() + skews.size());
    parallel_for(res.size(), [&](std::size_t idx) {
        if (idx < maps.size()) {
            const AugBilinearMap& M = maps[idx];
            std::string what = "map " + std::to_string(idx);
            if (!is_valid(M)) {
                res[idx] = {false, what + ": generator produced invalid map"};
                return;
            }
            if (M.p != 2 && !M.eps.is_zero()) {
                res[idx] = {false, what + ": eps nonzero at odd p"};
                return;
            }
            std::size_t N = *checked_pow(M.p, M.n, 1 << 12);
            std::vector<FpMat> L(N);
            std::vector<FpVec> vecs(N);
            for (std::size_t i = 0; i < N; ++i) {
                vecs[i] = vec_from_index(M.p, M.n, i);
                L[i] = left_action(M, vecs[i]);
            }
            FpMat Leps = left_action(M, M.eps);
            for (std::size_t i = 0; i < N && res[idx].ok; ++i) {
                FpVec bvv = mul(L[i], vecs[i]);
                if (mul(L[i], M.eps) != bvv || mul(Leps, vecs[i]) != bvv)
                    res[idx] = {false,
                                what + ": b(v,eps)=b(v,v)=b(eps,v) fails"};
            }
            for (std::size_t i = 0; i < N && res[idx].ok; ++i)
                for (std::size_t j = i; j < N && res[idx].ok; ++j)
                    if (mul(L[i], vecs[j]) != -mul(L[j], vecs[i]))
                        res[idx] = {false, what + ": skew-symmetry fails"};
        } else {
            const AugBilinearMap& S = skews[idx - maps.size()];
            std::string what = "skew map " + std::to_string(idx - maps.size());
            auto ext = extend_to_augmented(S);
            if (!is_valid(ext)) {
                res[idx] = {false, what + ": extension does not validate"};
                return;
            }
            if (ext.n - S.n != (S.p == 2 ? 1u : 0u)) {
                res[idx] = {false, what + ": wrong codimension"};
                return;
            }
            for (std::size_t i = 0; i < S.n && res[idx].ok; ++i)
                for (std::size_t j = 0; j < S.n && res[idx].ok; ++j)
                    if (ext.b(i, j) != S.b(i, j))
                        res[idx] = {false, what + ": restriction differs"};
        }
    });
    return aggregate("random-map-axioms", res,
                     std::to_string(maps.size()) + " maps pass the pairing "
                     "identities; " + std::to_string(skews.size()) +
                         " skew maps round-trip");
}

CriterionResult base_field_tables() {
    std::vector<Outcome> res(1);
    auto fail = [&](const std::string& msg) { res[0] = {false, msg}; };

    for (int a : kQ2SquareClasses)
        for (int b : kQ2SquareClasses)
            if (hilbert2_formula(a, b) != hilbert2_search(a, b)) {
                fail("symbol routes disagree at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
                break;
            }

    auto q2 = base_field(BaseFieldKind::Q2, 2);
    const int reps[3] = {-1, 2, 5};
    for (std::size_t i = 0; i < 3 && res[0].ok; ++i)
        for (std::size_t j = 0; j < 3 && res[0].ok; ++j)
            if (q2.map.b(i, j)[0] != hilbert2_formula(reps[i], reps[j]))
                fail("stored Q2 table differs from the symbol oracle");

    if (res[0].ok && eval(q2.map, q2.map.eps, q2.map.eps).is_zero())
        fail("Q2: (-1)(-1) vanishes");
    auto z2 = base_field(BaseFieldKind::Z2Ext, 2);
    if (res[0].ok && z2.map.eps.is_zero()) fail("Z2Ext: (-1) is zero");
    if (res[0].ok && !eval(z2.map, z2.map.eps, z2.map.eps).is_zero())
        fail("Z2Ext: (-1)(-1) does not vanish");
    if (res[0].ok && !is_quaternionic(q2.map).all_pass())
        fail("Q2 pairing fails a quaternionic axiom");

    return aggregate("base-field-tables", res,
                     "64 symbol pairs agree on both routes; stored tables "
                     "match");
}

std::vector<CriterionResult> run_suite(std::size_t nmax, uint8_t p,
                                       uint64_t seed) {
    std::vector<uint8_t> ps{p};
    auto skip = [](const char* name) {
        return CriterionResult{name, CriterionResult::Status::Skip,
                               "p=2 only"};
    };
    std::vector<CriterionResult> out;
    out.push_back(p == 2 ? slot_graph_equivalence(nmax)
                         : skip("slot-graph-equivalence"));
    out.push_back(p == 2 ? line_counterexample() : skip("line-counterexample"));
    out.push_back(presentation_duality(ps, nmax, 200, seed));
    out.push_back(slot_oracle_agreement(ps, nmax, 500, seed));
    out.push_back(construction_round_trip(ps, nmax));
    out.push_back(extension_dimension_laws(ps));
    out.push_back(hull_dimensions(ps, nmax));
    out.push_back(random_map_axiom_suite(ps, 1000, 200, seed));
    out.push_back(p == 2 ? base_field_tables() : skip("base-field-tables"));
    return out;
}

std::string format_report(const std::vector<CriterionResult>& results,
                          const std::string& echo, bool tsv) {
    std::ostringstream os;
    std::size_t pass = 0, failc = 0, skipc = 0;
    for (const auto& r : results) {
        if (r.status == CriterionResult::Status::Pass) ++pass;
        else if (r.status == CriterionResult::Status::Fail) ++failc;
        else ++skipc;
    }
    auto status_str = [](CriterionResult::Status s) {
        switch (s) {
            case CriterionResult::Status::Pass: return "PASS";
            case CriterionResult::Status::Fail: return "FAIL";
            default: return "SKIP";
        }
    };
    if (tsv) {
        os << "echo\t" << echo << "\n";
        for (const auto& r : results)
            os << "criterion\t" << r.name << "\t" << status_str(r.status) << "\t"
               << r.detail << "\n";
        os << "summary\tpass\t" << pass << "\n";
        os << "summary\tfail\t" << failc << "\n";
        os << "summary\tskip\t" << skipc << "\n";
    } else {
        os << "# " << echo << "\n";
        for (const auto& r : results)
            os << "criterion " << r.name << ": " << status_str(r.status) << " ("
               << r.detail << ")\n";
        os << "summary pass=" << pass << " fail=" << failc << " skip=" << skipc
           << "\n";
    }
    return os.str();
}

int report_exit_code(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (r.status == CriterionResult::Status::Fail) return 1;
    return 0;
}

}  // namespace qgk::verify
