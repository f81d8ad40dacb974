#include "qgk/tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qgk/parse_error.hpp"

namespace qgk {

FieldData base_field(BaseFieldKind kind, uint8_t p) {
    if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime");
    FieldData K;
    switch (kind) {
        case BaseFieldKind::Complex:
            K.map = AugBilinearMap::zero(p, 0, 0);
            K.provenance.push_back("base complex p=" + std::to_string(p));
            return K;
        case BaseFieldKind::Z2Ext:
            if (p != 2)
                throw std::invalid_argument("Z2Ext base requires p = 2");
            K.map = AugBilinearMap::zero(2, 1, 0);
            K.map.eps.set(0, 1);
            K.map.vlabels = {"(-1)"};
            K.provenance.push_back("base Z2-extension of Q");
            return K;
        case BaseFieldKind::Q2:
            if (p != 2) throw std::invalid_argument("Q2 base requires p = 2");
            K.map = AugBilinearMap::zero(2, 3, 1);
            K.map.eps.set(0, 1);
            K.map.vlabels = {"(-1)", "(2)", "(5)"};
            K.map.wlabels = {"(-1)*(-1)"};
            K.map.b(0, 0).set(0, 1);  // (-1,-1) is nonsplit over Q_2
            K.map.b(1, 2).set(0, 1);  // (2,5) is nonsplit
            K.map.b(2, 1).set(0, 1);
            K.provenance.push_back("base Q2");
            return K;
    }
    throw std::invalid_argument("unknown base field kind");
}

ExtensionResult extend_power_series(const FieldData& K, std::size_t m) {
    const AugBilinearMap& B = K.map;
    if (!is_valid(B))
        throw std::invalid_argument("extend_power_series: invalid input data");
    uint8_t p = B.p;
    std::size_t n0 = B.n, m0 = B.m;
    std::size_t n1 = n0 + m;
    std::size_t lam = m * (m - 1) / 2;
    std::size_t m1 = m0 + n0 * m + lam;

    AugBilinearMap E = AugBilinearMap::zero(p, n1, m1);

    // W slots: [0,m0) old, [m0, m0+n0*m) tensor block (i*m + l),
    // [m0+n0*m, m1) wedge block (k<l lexicographic)
    auto tensor_slot = [&](std::size_t i, std::size_t l) {
        return m0 + i * m + l;
    };
    auto wedge_slot = [&](std::size_t k, std::size_t l) {
        return m0 + n0 * m + (k * m - k * (k + 1) / 2 + (l - k - 1));
    };

    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t j = 0; j < n0; ++j)
            for (std::size_t t = 0; t < m0; ++t)
                E.b(i, j).coords[t] = B.b(i, j)[t];
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t l = 0; l < m; ++l) {
            E.b(i, n0 + l).coords[tensor_slot(i, l)] = 1;
            E.b(n0 + l, i).coords[tensor_slot(i, l)] = fp_neg(p, 1);
        }
    for (std::size_t k = 0; k < m; ++k) {
        // t_l ∪ t_l = eps ∪ t_l via the diagonal correction
        for (std::size_t i = 0; i < n0; ++i)
            if (B.eps[i])
                E.b(n0 + k, n0 + k).coords[tensor_slot(i, k)] = B.eps[i];
        for (std::size_t l = k + 1; l < m; ++l) {
            E.b(n0 + k, n0 + l).coords[wedge_slot(k, l)] = 1;
            E.b(n0 + l, n0 + k).coords[wedge_slot(k, l)] = fp_neg(p, 1);
        }
    }
    for (std::size_t i = 0; i < n0; ++i) E.eps.coords[i] = B.eps[i];

    // labels: old names kept, new generators t<k> numbered past the old
    // dimension, tensor products and wedges named from their factors
    auto vname = [&](std::size_t i) {
        return (i < B.vlabels.size()) ? B.vlabels[i] : "v" + std::to_string(i + 1);
    };
    std::vector<std::string> tnames;
    for (std::size_t l = 0; l < m; ++l)
        tnames.push_back("t" + std::to_string(n0 + l + 1));
    E.vlabels.clear();
    for (std::size_t i = 0; i < n0; ++i) E.vlabels.push_back(vname(i));
    for (const auto& t : tnames) E.vlabels.push_back(t);
    for (std::size_t t = 0; t < m0; ++t)
        E.wlabels.push_back(t < B.wlabels.size() ? B.wlabels[t]
                                                 : "w" + std::to_string(t + 1));
    for (std::size_t i = 0; i < n0; ++i)
        for (std::size_t l = 0; l < m; ++l)
            E.wlabels.push_back(vname(i) + "*" + tnames[l]);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l)
            E.wlabels.push_back(tnames[k] + "*" + tnames[l]);

    FpMat f1(p, n1, n0), f2(p, m1, m0);
    for (std::size_t i = 0; i < n0; ++i) f1.set(i, i, 1);
    for (std::size_t t = 0; t < m0; ++t) f2.set(t, t, 1);

    ExtensionResult res;
    res.field.map = std::move(E);
    res.field.provenance = K.provenance;
    res.field.provenance.push_back("extend m=" + std::to_string(m));
    res.restriction = Morphism{std::move(f1), std::move(f2), B, res.field.map};
    return res;
}

AugBilinearMap extend_to_augmented(const AugBilinearMap& skew) {
    uint8_t p = skew.p;
    for (std::size_t i = 0; i < skew.n; ++i)
        for (std::size_t j = i; j < skew.n; ++j)
            if (skew.b(j, i) != -skew.b(i, j))
                throw std::invalid_argument(
                    "extend_to_augmented: input is not skew-symmetric");

    if (p != 2) {
        AugBilinearMap out = skew;
        out.eps = FpVec(p, skew.n);  // skew implies alternating at odd p
        return out;
    }

    std::size_t n = skew.n;
    AugBilinearMap out = AugBilinearMap::zero(2, n + 1, skew.m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.b(i, j) = skew.b(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        out.b(i, n) = skew.b(i, i);  // b^(v, eps) = b(v, v)
        out.b(n, i) = skew.b(i, i);
    }
    out.eps.set(n, 1);
    if (!skew.vlabels.empty()) {
        out.vlabels = skew.vlabels;
        out.vlabels.push_back("eps");
    }
    out.wlabels = skew.wlabels;
    return out;
}

FieldData free_product_fields(const FieldData& K1, const FieldData& K2) {
    FieldData out;
    out.map = free_product(K1.map, K2.map);
    out.provenance = K1.provenance;
    out.provenance.insert(out.provenance.end(), K2.provenance.begin(),
                          K2.provenance.end());
    out.provenance.push_back("free product");
    return out;
}

namespace {

FieldData eval_tree_node(const ConstructionTree& t, uint8_t p);

}  // namespace

FieldData eval_tree(const ConstructionTree& t, uint8_t p) {
    auto order = tree_vertex_order(t);
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("eval_tree: duplicate vertex label");
    return eval_tree_node(t, p);
}

namespace {

FieldData eval_tree_node(const ConstructionTree& t, uint8_t p) {
    switch (t.kind) {
        case ConstructionTree::Kind::Leaf: {
            auto ext = extend_power_series(base_field(BaseFieldKind::Complex, p), 1);
            ext.field.map.vlabels = {"v" + std::to_string(t.label + 1)};
            ext.field.provenance = {"leaf v" + std::to_string(t.label + 1)};
            return ext.field;
        }
        case ConstructionTree::Kind::Cone: {
            FieldData child = eval_tree_node(t.children[0], p);
            std::size_t n0 = child.map.n;
            auto ext = extend_power_series(child, 1);
            std::string apex = "v" + std::to_string(t.label + 1);
            ext.field.map.vlabels[n0] = apex;
            // the new W vectors are the cone edges (u, apex)
            for (std::size_t i = 0; i < n0; ++i)
                ext.field.map.wlabels[child.map.m + i] =
                    "{" + child.map.vlabels[i] + "," + apex + "}";
            ext.field.provenance.back() = "cone " + apex;
            return ext.field;
        }
        case ConstructionTree::Kind::Free: {
            if (t.children.size() < 2)
                throw std::invalid_argument("free node needs at least 2 children");
            FieldData acc = eval_tree_node(t.children[0], p);
            for (std::size_t c = 1; c < t.children.size(); ++c)
                acc = free_product_fields(acc, eval_tree_node(t.children[c], p));
            return acc;
        }
    }
    throw std::invalid_argument("unknown tree node");
}

}  // namespace

// ---------------------------------------------------------------------------
// Tree text format

namespace {

struct TreeParser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, msg + " at position " + std::to_string(pos + 1));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::size_t parse_label() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start) fail("expected vertex label");
        long long v = std::stoll(s.substr(start, pos - start));
        if (v < 1) fail("labels are 1-based");
        return static_cast<std::size_t>(v - 1);
    }

    ConstructionTree parse() {
        expect('(');
        skip_ws();
        if (pos >= s.size()) fail("unterminated node");
        char tag = s[pos++];
        ConstructionTree node;
        if (tag == 'v') {
            node.kind = ConstructionTree::Kind::Leaf;
            node.label = parse_label();
        } else if (tag == '*') {
            node.kind = ConstructionTree::Kind::Cone;
            node.children.push_back(parse());
            node.label = parse_label();
        } else if (tag == '+') {
            node.kind = ConstructionTree::Kind::Free;
            skip_ws();
            while (pos < s.size() && s[pos] == '(') {
                node.children.push_back(parse());
                skip_ws();
            }
            if (node.children.size() < 2) fail("free node needs >= 2 children");
        } else {
            fail("expected one of 'v', '*', '+'");
        }
        expect(')');
        return node;
    }
};

}  // namespace

ConstructionTree parse_tree(const std::string& text) {
    TreeParser tp{text};
    ConstructionTree t = tp.parse();
    tp.skip_ws();
    if (tp.pos != text.size()) tp.fail("trailing characters");
    return t;
}

std::string format_tree(const ConstructionTree& t) {
    std::ostringstream os;
    switch (t.kind) {
        case ConstructionTree::Kind::Leaf:
            os << "(v " << (t.label + 1) << ")";
            break;
        case ConstructionTree::Kind::Cone:
            os << "(* " << format_tree(t.children[0]) << " " << (t.label + 1)
               << ")";
            break;
        case ConstructionTree::Kind::Free:
            os << "(+";
            for (const auto& c : t.children) os << " " << format_tree(c);
            os << ")";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// 2-adic Hilbert symbols

const std::array<int, 8> kQ2SquareClasses = {1, -1, 2, -2, 5, -5, 10, -10};

namespace {

void split2(int a, int& alpha, int& u) {
    alpha = 0;
    u = a;
    while (u % 2 == 0) {
        u /= 2;
        ++alpha;
    }
}

int eps_unit(int u) {  // (u-1)/2 mod 2
    int r = ((u - 1) / 2) % 2;
    return r < 0 ? r + 2 : r;
}

int omega_unit(int u) {  // (u^2-1)/8 mod 2
    int r = ((u * u - 1) / 8) % 2;
    return r < 0 ? r + 2 : r;
}

}  // namespace

int hilbert2_formula(int a, int b) {
    if (a == 0 || b == 0) throw std::invalid_argument("zero argument");
    int alpha, u, beta, v;
    split2(a, alpha, u);
    split2(b, beta, v);
    return (eps_unit(u) * eps_unit(v) + alpha * omega_unit(v) +
            beta * omega_unit(u)) %
           2;
}

int hilbert2_search(int a, int b, unsigned k) {
    if (a == 0 || b == 0) throw std::invalid_argument("zero argument");
    if (k < 5 || k > 16) throw std::invalid_argument("modulus out of range");
    const long long mod = 1LL << k;
    auto sq = [&](long long x) { return (x * x) % mod; };

    // squares mod 2^k, split by parity of the root
    std::vector<bool> square(static_cast<std::size_t>(mod), false);
    std::vector<bool> odd_square(static_cast<std::size_t>(mod), false);
    for (long long z = 0; z < mod; ++z) {
        square[static_cast<std::size_t>(sq(z))] = true;
        if (z % 2) odd_square[static_cast<std::size_t>(sq(z))] = true;
    }

    for (long long x = 0; x < mod; ++x)
        for (long long y = 0; y < mod; ++y) {
            long long c = ((a % mod) * sq(x) + (b % mod) * sq(y)) % mod;
            if (c < 0) c += mod;
            bool prim = (x % 2) || (y % 2);
            // z must keep the triple primitive when x and y are even
            if (prim ? square[static_cast<std::size_t>(c)]
                     : odd_square[static_cast<std::size_t>(c)])
                return 0;  // isotropic: the symbol splits
        }
    return 1;
}

}  // namespace qgk
