#include "qgk/bilform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgk/parse_error.hpp"

namespace qgk {

AugBilinearMap AugBilinearMap::zero(uint8_t p, std::size_t n, std::size_t m) {
    AugBilinearMap M;
    M.p = p;
    M.n = n;
    M.m = m;
    M.gram.assign(n * n, FpVec(p, m));
    M.eps = FpVec(p, n);
    return M;
}

FpVec eval(const AugBilinearMap& M, const FpVec& v, const FpVec& u) {
    if (v.p != M.p || u.p != M.p || v.dim() != M.n || u.dim() != M.n)
        throw std::invalid_argument("eval: argument dimension mismatch");
    FpVec acc(M.p, M.m);
    for (std::size_t i = 0; i < M.n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < M.n; ++j) {
            if (u[j] == 0) continue;
            add_scaled(acc, fp_mul(M.p, v[i], u[j]), M.b(i, j));
        }
    }
    return acc;
}

FpMat left_action(const AugBilinearMap& M, const FpVec& v) {
    FpMat L(M.p, M.m, M.n);
    for (std::size_t i = 0; i < M.n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < M.n; ++j) {
            const FpVec& g = M.b(i, j);
            for (std::size_t t = 0; t < M.m; ++t)
                L.a[t * M.n + j] = static_cast<uint8_t>(
                    (L.a[t * M.n + j] + v[i] * g[t]) % M.p);
        }
    }
    return L;
}

FpMat products_matrix(const AugBilinearMap& M) {
    FpMat B(M.p, M.m, M.n * M.n);
    for (std::size_t i = 0; i < M.n; ++i)
        for (std::size_t j = 0; j < M.n; ++j) {
            const FpVec& g = M.b(i, j);
            for (std::size_t t = 0; t < M.m; ++t)
                B.a[t * B.cols + i * M.n + j] = g[t];
        }
    return B;
}

std::string to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::NotSkew: return "NotSkew";
        case Violation::Kind::EpsOrder: return "EpsOrder";
        case Violation::Kind::AxiomI: return "AxiomI";
        case Violation::Kind::Malformed: return "Malformed";
    }
    return "?";
}

std::vector<Violation> validate(const AugBilinearMap& M) {
    std::vector<Violation> out;
    auto malformed = [&](const std::string& d) {
        out.push_back({Violation::Kind::Malformed, 0, 0, d});
    };

    if (!is_supported_prime(M.p)) {
        malformed("unsupported prime " + std::to_string(M.p));
        return out;
    }
    if (M.gram.size() != M.n * M.n) malformed("gram table is not n*n");
    if (M.eps.dim() != M.n || M.eps.p != M.p) malformed("eps has wrong shape");
    for (const FpVec& g : M.gram)
        if (g.dim() != M.m || g.p != M.p) {
            malformed("gram entry has wrong shape");
            break;
        }
    for (const FpVec& g : M.gram)
        for (uint8_t c : g.coords)
            if (c >= M.p) {
                malformed("gram entry out of range");
                break;
            }
    if (!M.vlabels.empty() && M.vlabels.size() != M.n)
        malformed("vlabels size mismatch");
    if (!M.wlabels.empty() && M.wlabels.size() != M.m)
        malformed("wlabels size mismatch");
    if (!out.empty()) return out;

    for (std::size_t i = 0; i < M.n; ++i)
        for (std::size_t j = i; j < M.n; ++j)
            if (M.b(j, i) != -M.b(i, j)) {
                out.push_back({Violation::Kind::NotSkew, i, j,
                               "b(v" + std::to_string(j + 1) + ",v" +
                                   std::to_string(i + 1) + ") != -b(v" +
                                   std::to_string(i + 1) + ",v" +
                                   std::to_string(j + 1) + ")"});
            }

    if (M.p != 2 && !M.eps.is_zero()) {
        std::size_t i = 0;
        while (M.eps[i] == 0) ++i;
        out.push_back({Violation::Kind::EpsOrder, i, 0,
                       "2*eps != 0: eps coordinate " + std::to_string(i + 1) +
                           " nonzero at odd p"});
    }

    if (M.p == 2) {
        for (std::size_t i = 0; i < M.n; ++i) {
            FpVec vi(M.p, M.n);
            vi.coords[i] = 1;
            if (M.b(i, i) != eval(M, vi, M.eps))
                out.push_back({Violation::Kind::AxiomI, i, i,
                               "b(v" + std::to_string(i + 1) + ",v" +
                                   std::to_string(i + 1) +
                                   ") != b(v" + std::to_string(i + 1) + ",eps)"});
        }
    }
    return out;
}

bool is_valid(const AugBilinearMap& M) { return validate(M).empty(); }

bool is_surjective(const AugBilinearMap& M) {
    if (M.m == 0) return true;
    return rank(products_matrix(M)) == M.m;
}

std::optional<std::string> morphism_violation(const Morphism& f) {
    const AugBilinearMap& S = f.source;
    const AugBilinearMap& T = f.target;
    if (S.p != T.p || f.f1.p != S.p || f.f2.p != S.p)
        return "prime mismatch";
    if (f.f1.cols != S.n || f.f1.rows != T.n) return "f1 has wrong shape";
    if (f.f2.cols != S.m || f.f2.rows != T.m) return "f2 has wrong shape";
    if (mul(f.f1, S.eps) != T.eps) return "f1(eps) != eps'";
    for (std::size_t i = 0; i < S.n; ++i)
        for (std::size_t j = 0; j < S.n; ++j) {
            FpVec ei(S.p, S.n), ej(S.p, S.n);
            ei.coords[i] = 1;
            ej.coords[j] = 1;
            if (mul(f.f2, S.b(i, j)) != eval(T, mul(f.f1, ei), mul(f.f1, ej)))
                return "square does not commute at basis pair (" +
                       std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
    return std::nullopt;
}

bool check_monomorphism(const Morphism& f) {
    if (auto v = morphism_violation(f))
        throw std::invalid_argument("morphism invariant violated: " + *v);
    return rank(f.f1) == f.source.n && rank(f.f2) == f.source.m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!equal(g.source, f.target))
        throw std::invalid_argument("compose: middle objects differ");
    return Morphism{mul(g.f1, f.f1), mul(g.f2, f.f2), f.source, g.target};
}

AugBilinearMap free_product(const AugBilinearMap& M1, const AugBilinearMap& M2) {
    if (M1.p != M2.p) throw std::invalid_argument("free_product: prime mismatch");
    if (!M1.eps.is_zero() || !M2.eps.is_zero())
        throw std::invalid_argument(
            "free_product: nonzero eps not supported (no finite model of an "
            "eps-amalgamated product)");
    AugBilinearMap R = AugBilinearMap::zero(M1.p, M1.n + M2.n, M1.m + M2.m);
    for (std::size_t i = 0; i < M1.n; ++i)
        for (std::size_t j = 0; j < M1.n; ++j)
            for (std::size_t t = 0; t < M1.m; ++t)
                R.b(i, j).coords[t] = M1.b(i, j)[t];
    for (std::size_t i = 0; i < M2.n; ++i)
        for (std::size_t j = 0; j < M2.n; ++j)
            for (std::size_t t = 0; t < M2.m; ++t)
                R.b(M1.n + i, M1.n + j).coords[M1.m + t] = M2.b(i, j)[t];

    auto fill = [](std::vector<std::string> l, std::size_t k, const char* stem) {
        if (l.empty())
            for (std::size_t i = 0; i < k; ++i)
                l.push_back(stem + std::to_string(i + 1));
        return l;
    };
    if (!M1.vlabels.empty() || !M2.vlabels.empty()) {
        R.vlabels = fill(M1.vlabels, M1.n, "v");
        auto r = fill(M2.vlabels, M2.n, "v'");
        R.vlabels.insert(R.vlabels.end(), r.begin(), r.end());
    }
    if (!M1.wlabels.empty() || !M2.wlabels.empty()) {
        R.wlabels = fill(M1.wlabels, M1.m, "w");
        auto r = fill(M2.wlabels, M2.m, "w'");
        R.wlabels.insert(R.wlabels.end(), r.begin(), r.end());
    }
    return R;
}

bool equal(const AugBilinearMap& M1, const AugBilinearMap& M2) {
    return M1.p == M2.p && M1.n == M2.n && M1.m == M2.m &&
           M1.gram == M2.gram && M1.eps == M2.eps;
}

bool permuted_equal(const AugBilinearMap& M1, const AugBilinearMap& M2,
                    const std::vector<std::size_t>& sigma) {
    if (M1.p != M2.p || M1.n != M2.n || M1.m != M2.m) return false;
    if (sigma.size() != M1.n) return false;
    std::vector<bool> seen(M1.n, false);
    for (std::size_t s : sigma) {
        if (s >= M1.n || seen[s]) return false;
        seen[s] = true;
    }
    for (std::size_t i = 0; i < M1.n; ++i)
        if (M2.eps[sigma[i]] != M1.eps[i]) return false;

    // f2 must map b1(v_i,v_j) to b2(v_sigma(i),v_sigma(j)); it exists and
    // is injective on the product span iff the two product matrices have
    // the same kernel, i.e. rank B1 = rank B2 = rank [B1;B2].
    FpMat B1 = products_matrix(M1);
    FpMat B2(M1.p, M1.m, M1.n * M1.n);
    for (std::size_t i = 0; i < M1.n; ++i)
        for (std::size_t j = 0; j < M1.n; ++j) {
            const FpVec& g = M2.b(sigma[i], sigma[j]);
            for (std::size_t t = 0; t < M1.m; ++t)
                B2.a[t * B2.cols + i * M1.n + j] = g[t];
        }
    std::size_t r1 = rank(B1), r2 = rank(B2);
    return r1 == r2 && rank(vstack(B1, B2)) == r1;
}

std::string write_map(const AugBilinearMap& M) {
    std::ostringstream os;
    os << "p " << unsigned(M.p) << "\n";
    os << "dimV " << M.n << "\n";
    os << "dimW " << M.m << "\n";
    os << "eps";
    for (std::size_t i = 0; i < M.n; ++i) os << ' ' << unsigned(M.eps[i]);
    os << "\n";
    for (std::size_t i = 0; i < M.n; ++i)
        for (std::size_t j = 0; j < M.n; ++j) {
            os << "b " << (i + 1) << ' ' << (j + 1);
            for (std::size_t t = 0; t < M.m; ++t)
                os << ' ' << unsigned(M.b(i, j)[t]);
            os << "\n";
        }
    return os.str();
}

AugBilinearMap parse_map(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&](const char* want) {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            return;
        }
        throw ParseError(lineno, std::string("missing ") + want + " line");
    };

    auto header_value = [&](const char* key) -> long long {
        next_line(key);
        std::istringstream ls(line);
        std::string k;
        long long v;
        if (!(ls >> k >> v) || k != key)
            throw ParseError(lineno, std::string("expected '") + key + " <int>'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens");
        return v;
    };

    long long pv = header_value("p");
    if (pv < 2 || !is_supported_prime(static_cast<unsigned>(pv)))
        throw ParseError(lineno, "unsupported prime");
    uint8_t p = static_cast<uint8_t>(pv);
    long long n = header_value("dimV");
    long long m = header_value("dimW");
    if (n < 0 || m < 0) throw ParseError(lineno, "negative dimension");
    if (n > 128 || m > 8192)
        throw ParseError(lineno, "dimension exceeds the supported desk scale");

    AugBilinearMap M = AugBilinearMap::zero(p, static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(m));

    next_line("eps");
    {
        std::istringstream ls(line);
        std::string k;
        ls >> k;
        if (k != "eps") throw ParseError(lineno, "expected eps line");
        for (long long i = 0; i < n; ++i) {
            long long c;
            if (!(ls >> c)) throw ParseError(lineno, "eps has too few entries");
            if (c < 0 || c >= p) throw ParseError(lineno, "eps entry out of range");
            M.eps.coords[static_cast<std::size_t>(i)] = static_cast<uint8_t>(c);
        }
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "eps has too many entries");
    }

    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string k;
        long long i, j;
        if (!(ls >> k >> i >> j) || k != "b")
            throw ParseError(lineno, "expected 'b <i> <j> ...'");
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError(lineno, "basis index out of range");
        std::size_t idx = static_cast<std::size_t>((i - 1) * n + (j - 1));
        if (seen[idx]) throw ParseError(lineno, "duplicate b entry");
        seen[idx] = true;
        FpVec w(p, static_cast<std::size_t>(m));
        for (long long t = 0; t < m; ++t) {
            long long c;
            if (!(ls >> c)) throw ParseError(lineno, "b line has too few entries");
            if (c < 0 || c >= p) throw ParseError(lineno, "b entry out of range");
            w.coords[static_cast<std::size_t>(t)] = static_cast<uint8_t>(c);
        }
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "b line has too many entries");
        M.gram[idx] = std::move(w);
    }
    for (std::size_t idx = 0; idx < seen.size(); ++idx)
        if (!seen[idx])
            throw ParseError(lineno, "missing b entry for pair (" +
                                         std::to_string(idx / M.n + 1) + "," +
                                         std::to_string(idx % M.n + 1) + ")");
    return M;
}

}  // namespace qgk
