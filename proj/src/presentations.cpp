#include "qgk/presentations.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgk/parse_error.hpp"

namespace qgk {

Word Word::from_letters(std::vector<std::pair<unsigned, long long>> ls) {
    Word w;
    for (auto& [g, e] : ls) {
        if (e == 0) continue;
        if (!w.letters.empty() && w.letters.back().first == g) {
            w.letters.back().second += e;
            if (w.letters.back().second == 0) w.letters.pop_back();
        } else {
            w.letters.emplace_back(g, e);
        }
    }
    return w;
}

Word inverse(const Word& w) {
    std::vector<std::pair<unsigned, long long>> ls;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        ls.emplace_back(it->first, -it->second);
    return Word::from_letters(std::move(ls));
}

Word concat(const Word& a, const Word& b) {
    auto ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return Word::from_letters(std::move(ls));
}

Word commutator(const Word& a, const Word& b) {
    return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct WordParser {
    const std::string& s;
    const std::vector<std::string>& gens;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, msg + " at position " + std::to_string(pos + 1) +
                                " in word '" + s + "'");
    }

    // longest declared generator name starting at pos
    std::optional<unsigned> match_gen() {
        std::size_t best_len = 0;
        unsigned best = 0;
        for (unsigned g = 0; g < gens.size(); ++g) {
            const std::string& name = gens[g];
            if (name.size() > best_len && s.compare(pos, name.size(), name) == 0)
                best_len = name.size(), best = g;
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best;
    }

    long long parse_exponent() {
        ++pos;  // '^'
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1))
            fail("malformed exponent");
        long long e = 0;
        try {
            e = std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("exponent out of range");
        }
        if (e == 0) fail("zero exponent");
        if (e > 1000000 || e < -1000000) fail("exponent out of range");
        return e;
    }

    Word parse(char terminator) {
        std::vector<std::pair<unsigned, long long>> ls;
        while (pos < s.size() && s[pos] != terminator && s[pos] != ',') {
            if (s[pos] == '[') {
                ++pos;
                Word w1 = parse(']');
                if (pos >= s.size() || s[pos] != ',') fail("expected ',' in commutator");
                ++pos;
                Word w2 = parse(']');
                if (pos >= s.size() || s[pos] != ']') fail("unterminated commutator");
                ++pos;
                Word c = commutator(w1, w2);
                long long e = (pos < s.size() && s[pos] == '^') ? parse_exponent() : 1;
                Word piece = e < 0 ? inverse(c) : c;
                for (long long t = 0; t < std::llabs(e); ++t)
                    ls.insert(ls.end(), piece.letters.begin(), piece.letters.end());
                continue;
            }
            if (name_char(s[pos])) {
                auto g = match_gen();
                if (!g) {
                    std::size_t end = pos;
                    while (end < s.size() && name_char(s[end])) ++end;
                    fail("unknown generator '" + s.substr(pos, end - pos) + "'");
                }
                long long e = (pos < s.size() && s[pos] == '^') ? parse_exponent() : 1;
                ls.emplace_back(*g, e);
                continue;
            }
            fail(std::string("unexpected character '") + s[pos] + "'");
        }
        return Word::from_letters(std::move(ls));
    }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
    WordParser wp{text, gens};
    Word w = wp.parse('\0');
    if (wp.pos != text.size()) wp.fail("unexpected character");
    return w;
}

Presentation parse_presentation(const std::string& text) {
    // tokenize on whitespace, splitting ';' off
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else if (ch == ';') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
            tokens.push_back(";");
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));

    Presentation P;
    std::size_t t = 0;
    if (t >= tokens.size() || tokens[t] != "gens")
        throw ParseError(0, "expected 'gens'");
    ++t;
    while (t < tokens.size() && tokens[t] != ";") {
        const std::string& name = tokens[t];
        if (!std::all_of(name.begin(), name.end(), name_char) ||
            std::isdigit(static_cast<unsigned char>(name[0])))
            throw ParseError(0, "bad generator name '" + name + "'");
        if (std::find(P.gens.begin(), P.gens.end(), name) != P.gens.end())
            throw ParseError(0, "duplicate generator '" + name + "'");
        P.gens.push_back(name);
        ++t;
    }
    if (t >= tokens.size()) throw ParseError(0, "missing ';' after gens");
    ++t;
    if (P.gens.empty()) throw ParseError(0, "no generators declared");

    while (t < tokens.size()) {
        if (tokens[t] != "rel")
            throw ParseError(0, "expected 'rel', got '" + tokens[t] + "'");
        ++t;
        if (t >= tokens.size() || tokens[t] == ";")
            throw ParseError(0, "empty relator");
        Word w = parse_word(tokens[t], P.gens);
        if (w.letters.empty()) throw ParseError(0, "relator reduces to empty word");
        P.relators.push_back(std::move(w));
        ++t;
        if (t >= tokens.size() || tokens[t] != ";")
            throw ParseError(0, "missing ';' after relator");
        ++t;
    }
    return P;
}

// ---------------------------------------------------------------------------
// Normal forms

NormalFormS3 NormalFormS3::zero(uint8_t p, std::size_t n) {
    NormalFormS3 nf;
    nf.p = p;
    nf.n = n;
    nf.c.assign(n, 0);
    nf.d.assign(n * (n - 1) / 2, 0);
    return nf;
}

static std::size_t upper_off(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

uint8_t NormalFormS3::dval(std::size_t i, std::size_t j) const {
    return d[upper_off(n, i, j)];
}

void NormalFormS3::dset(std::size_t i, std::size_t j, long long v) {
    d[upper_off(n, i, j)] = fp_reduce(p, v);
}

NormalFormS3 collect_mod_s3(const Word& w, std::size_t n, uint8_t p) {
    if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime");
    for (const auto& [g, e] : w.letters) {
        if (g >= n) throw std::invalid_argument("generator index out of range");
        if (e == 0) throw std::invalid_argument("zero exponent in word");
    }
    NormalFormS3 nf = NormalFormS3::zero(p, n);
    auto letters = w.letters;

    // bubble the letters into generator order; each transposition of
    // x_k^s past x_j^t (k > j) is exact modulo central commutators
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t t = 0; t + 1 < letters.size(); ++t) {
            auto& [k, s] = letters[t];
            auto& [j, r] = letters[t + 1];
            if (k == j) {
                letters[t].second += r;
                letters.erase(letters.begin() + static_cast<long>(t + 1));
                if (letters[t].second == 0)
                    letters.erase(letters.begin() + static_cast<long>(t));
                moved = true;
                break;
            }
            if (k > j) {
                long long add = -fp_reduce(p, s) * fp_reduce(p, r);
                nf.dset(j, k, nf.dval(j, k) + add);
                std::swap(letters[t], letters[t + 1]);
                moved = true;
            }
        }
    }

    uint16_t psq = static_cast<uint16_t>(p * p);
    for (const auto& [g, e] : letters) {
        long long red = e % psq;
        if (red < 0) red += psq;
        nf.c[g] = static_cast<uint16_t>((nf.c[g] + red) % psq);
    }
    return nf;
}

NormalFormS3 nf_mul(const NormalFormS3& a, const NormalFormS3& b) {
    if (a.p != b.p || a.n != b.n)
        throw std::invalid_argument("nf_mul: shape mismatch");
    NormalFormS3 r = NormalFormS3::zero(a.p, a.n);
    uint16_t psq = static_cast<uint16_t>(a.p * a.p);
    for (std::size_t i = 0; i < a.n; ++i)
        r.c[i] = static_cast<uint16_t>((a.c[i] + b.c[i]) % psq);
    // sorting x_j^{a_j} (left factor) past x_i^{b_i} (right factor), j > i
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = i + 1; j < a.n; ++j)
            r.dset(i, j, a.dval(i, j) + b.dval(i, j) -
                             static_cast<long long>(a.c[j] % a.p) *
                                 static_cast<long long>(b.c[i] % a.p));
    return r;
}

NormalFormS3 nf_inv(const NormalFormS3& a) {
    NormalFormS3 r = NormalFormS3::zero(a.p, a.n);
    uint16_t psq = static_cast<uint16_t>(a.p * a.p);
    for (std::size_t i = 0; i < a.n; ++i)
        r.c[i] = static_cast<uint16_t>((psq - a.c[i]) % psq);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = i + 1; j < a.n; ++j)
            r.dset(i, j, -static_cast<long long>(a.dval(i, j)) -
                             static_cast<long long>(a.c[i] % a.p) *
                                 static_cast<long long>(a.c[j] % a.p));
    return r;
}

MagnusDeg2 magnus_degree2(const Word& w, std::size_t n, uint8_t p) {
    if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime");
    for (const auto& [g, e] : w.letters)
        if (g >= n) throw std::invalid_argument("generator index out of range");
    long long psq = p * p;
    std::vector<long long> lin(n, 0);        // mod p^2
    std::vector<long long> quad(n * n, 0);   // mod p

    for (const auto& [g, e] : w.letters) {
        // (1 + X)^e truncated: linear e, quadratic e(e-1)/2 (an integer
        // for all e, also negative: (1+X)^-1 = 1 - X + X^2 - ...)
        long long le = e % psq;
        if (le < 0) le += psq;
        long long qe;
        if (p == 2) {
            qe = (e * (e - 1) / 2) % 2;  // 2 is not invertible, use the integer
            if (qe < 0) qe += 2;
        } else {
            long long ea = ((e % p) + p) % p;
            long long eb = (((e - 1) % p) + p) % p;
            qe = ea * eb % p * ((p + 1) / 2) % p;  // (p+1)/2 = 1/2 mod p
        }
        // state := state * factor (constant terms are 1)
        for (std::size_t i = 0; i < n; ++i)
            quad[i * n + g] = (quad[i * n + g] + (lin[i] % p) * (le % p)) % p;
        quad[g * n + g] = (quad[g * n + g] + qe) % p;
        lin[g] = (lin[g] + le) % psq;
    }

    MagnusDeg2 out;
    out.e.resize(n);
    out.eps2.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) out.e[i] = static_cast<uint16_t>(lin[i]);
    for (std::size_t t = 0; t < n * n; ++t)
        out.eps2[t] = static_cast<uint8_t>((quad[t] % p + p) % p);
    return out;
}

RelatorCoords relator_coordinates(const Word& w, std::size_t n, uint8_t p) {
    NormalFormS3 nf = collect_mod_s3(w, n, p);
    for (std::size_t i = 0; i < n; ++i)
        if (nf.c[i] % p != 0)
            throw std::invalid_argument(
                "relator not in Frattini subgroup: exponent sum of generator " +
                std::to_string(i + 1) + " is " + std::to_string(nf.c[i] % p) +
                " mod " + std::to_string(p));
    RelatorCoords rc;
    rc.a = FpVec(p, n);
    for (std::size_t i = 0; i < n; ++i)
        rc.a.coords[i] = static_cast<uint8_t>(nf.c[i] / p);
    rc.arel = nf.d;
    return rc;
}

AugBilinearMap presentation_cup_product(const Presentation& P, uint8_t p) {
    std::size_t n = P.gens.size();
    std::size_t m = P.relators.size();
    std::vector<RelatorCoords> coords;
    coords.reserve(m);
    for (const Word& r : P.relators)
        coords.push_back(relator_coordinates(r, n, p));

    // minimality certificate: the coordinate vectors must be independent
    std::size_t width = n + n * (n - 1) / 2;
    std::vector<FpVec> rows;
    for (const RelatorCoords& rc : coords) {
        FpVec row(p, width);
        for (std::size_t i = 0; i < n; ++i) row.coords[i] = rc.a[i];
        std::copy(rc.arel.begin(), rc.arel.end(), row.coords.begin() + static_cast<long>(n));
        rows.push_back(std::move(row));
    }
    if (m > 0 && rank(FpMat::from_rows(p, width, rows)) != m)
        throw std::invalid_argument(
            "cannot certify minimal presentation: relator coordinates are "
            "dependent modulo the third filtration step");

    AugBilinearMap M = AugBilinearMap::zero(p, n, m);
    M.vlabels = P.gens;
    for (std::size_t r = 0; r < m; ++r)
        M.wlabels.push_back("r" + std::to_string(r + 1));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            FpVec w(p, m);
            for (std::size_t r = 0; r < m; ++r)
                w.coords[r] = coords[r].arel[upper_off(n, i, j)];
            M.b(i, j) = w;
            M.b(j, i) = -w;
        }
    if (p == 2)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < m; ++r)
                M.b(i, i).coords[r] = coords[r].a[i];

    if (p == 2 && n > 0) {
        // eps from b(v_i, eps) = b(v_i, v_i), stacked over all i and all
        // W coordinates
        FpMat A(p, n * m, n);
        FpVec rhs(p, n * m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < m; ++t) {
                for (std::size_t j = 0; j < n; ++j)
                    A.set(i * m + t, j, M.b(i, j)[t]);
                rhs.coords[i * m + t] = M.b(i, i)[t];
            }
        auto eps = solve(A, rhs);
        if (!eps)
            throw std::invalid_argument("no augmentation exists for this map");
        M.eps = *eps;
    }
    return M;
}

Presentation raag_presentation(const SimplicialGraph& g) {
    Presentation P;
    for (std::size_t i = 0; i < g.n; ++i)
        P.gens.push_back("x" + std::to_string(i + 1));
    for (const auto& e : g.edges) {
        Word a = Word::from_letters({{static_cast<unsigned>(e.first), 1}});
        Word b = Word::from_letters({{static_cast<unsigned>(e.second), 1}});
        P.relators.push_back(commutator(a, b));
    }
    return P;
}

}  // namespace qgk
