#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qgk/bilform.hpp"
#include "qgk/graphs.hpp"
#include "qgk/hull.hpp"
#include "qgk/parse_error.hpp"
#include "qgk/presentations.hpp"
#include "qgk/slot.hpp"
#include "qgk/tower.hpp"
#include "qgk/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string vec_str(const qgk::FpVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ' ';
        s += std::to_string(unsigned(v[i]));
    }
    return s;
}

// graph | presentation | tree, by the first meaningful token
enum class InputKind { Graph, Presentation, Tree };

InputKind sniff_kind(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string content = line.substr(0, line.find('#'));
        std::istringstream ls(content);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '(') return InputKind::Tree;
        if (tok == "gens") return InputKind::Presentation;
        if (std::isdigit(static_cast<unsigned char>(tok[0])))
            return InputKind::Graph;
        throw qgk::ParseError(0, "cannot determine input kind from '" + tok + "'");
    }
    throw qgk::ParseError(0, "empty input");
}

void print_witness(const qgk::SlotWitness& w) {
    std::cout << "witness v: " << vec_str(w.v) << "\n";
    std::cout << "witness u: " << vec_str(w.u) << "\n";
    std::cout << "witness v': " << vec_str(w.v2) << "\n";
    std::cout << "witness u': " << vec_str(w.u2) << "\n";
}

int cmd_graph_check(const std::string& path, unsigned p) {
    auto g = qgk::parse_graph(read_file(path));
    auto d = qgk::decompose(g);
    bool realizable = std::holds_alternative<qgk::ConstructionTree>(d);
    std::ostringstream line;
    if (realizable)
        line << "tree: " << qgk::format_tree(std::get<qgk::ConstructionTree>(d));
    else
        line << "forbidden " << qgk::to_string(std::get<qgk::ForbiddenWitness>(d));

    int exit_code = 0;
    if (p == 2) {
        auto slot = qgk::has_common_slot(
            qgk::graph_bilinear(g, static_cast<uint8_t>(p)));
        line << "; common-slot: " << (slot.has_slot ? "true" : "false");
        if (slot.has_slot != realizable) {
            line << "; MISMATCH: slot verdict disagrees with the graph "
                    "criterion";
            exit_code = 1;
        }
    }
    std::cout << line.str() << "\n";
    return exit_code;
}

int cmd_emit_bilinear(const std::string& path, unsigned p,
                      const std::string& out_path) {
    std::string text = read_file(path);
    qgk::AugBilinearMap M;
    switch (sniff_kind(text)) {
        case InputKind::Graph:
            M = qgk::graph_bilinear(qgk::parse_graph(text),
                                    static_cast<uint8_t>(p));
            break;
        case InputKind::Presentation:
            M = qgk::presentation_cup_product(qgk::parse_presentation(text),
                                              static_cast<uint8_t>(p));
            break;
        case InputKind::Tree:
            M = qgk::eval_tree(qgk::parse_tree(text), static_cast<uint8_t>(p))
                    .map;
            break;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << qgk::write_map(M);
    std::cout << "wrote " << out_path << " (dimV=" << M.n << " dimW=" << M.m
              << " p=" << p << ")\n";
    return 0;
}

int cmd_slot(const std::string& path) {
    auto M = qgk::parse_map(read_file(path));
    auto violations = qgk::validate(M);
    if (!violations.empty())
        throw std::runtime_error("map file fails validation: " +
                                 qgk::to_string(violations.front().kind) + " " +
                                 violations.front().detail);
    auto r = qgk::has_common_slot(M);
    std::cout << "common-slot: " << (r.has_slot ? "true" : "false") << "\n";
    if (r.witness) print_witness(*r.witness);
    if (M.p == 2) {
        auto q = qgk::is_quaternionic(M);
        auto show = [](const char* name, const qgk::AxiomCheck& a) {
            std::cout << "quaternionic " << name << ": "
                      << (a.pass ? "pass" : "fail");
            if (!a.note.empty()) std::cout << " [" << a.note << "]";
            std::cout << "\n";
        };
        show("(1)", q.axiom1);
        show("(2)", q.axiom2);
        show("(3)", q.axiom3);
        show("(4)", q.axiom4);
    }
    return 0;
}

int cmd_hull(const std::string& path, unsigned dmax) {
    auto M = qgk::parse_map(read_file(path));
    auto violations = qgk::validate(M);
    if (!violations.empty())
        throw std::runtime_error("map file fails validation: " +
                                 qgk::to_string(violations.front().kind) + " " +
                                 violations.front().detail);
    auto h = qgk::hull_dims(M, dmax);
    std::cout << "hull";
    for (std::size_t d : h.dims) std::cout << ' ' << d;
    std::cout << "\n";
    auto r = qgk::functor_F_of_G(M);
    if (r.iso)
        std::cout << "fg-iso: reproduced\n";
    else if (!r.pure_equals_kernel)
        std::cout << "fg-iso: none (pure tensors span less than the kernel "
                     "by "
                  << (M.n * M.n - qgk::rank(qgk::products_matrix(M)) -
                      qgk::pure_kernel_span(M).size())
                  << " dimensions)\n";
    else
        std::cout << "fg-iso: none (map is not surjective)\n";
    return 0;
}

int cmd_verify(unsigned nmax, unsigned p, uint64_t seed,
               const std::string& format) {
    auto results =
        qgk::verify::run_suite(nmax, static_cast<uint8_t>(p), seed);
    std::string echo = "qgk verify nmax=" + std::to_string(nmax) +
                       " p=" + std::to_string(p) +
                       " seed=" + std::to_string(seed);
    std::cout << qgk::verify::format_report(results, echo, format == "tsv");
    return qgk::verify::report_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "finite computation with augmented bilinear maps over prime fields"};
    app.require_subcommand(1);

    unsigned p = 2, nmax = 4, dmax = 3;
    uint64_t seed = 42;
    std::string path, out_path, format = "human";

    auto* gc = app.add_subcommand("graph-check",
                                  "decompose a graph or exhibit an induced "
                                  "4-line/4-circle; decide the common slot "
                                  "property of its bilinear map at p=2");
    gc->add_option("path", path, "GRAPH file")->required();
    gc->add_option("--p", p, "prime (2, 3, 5 or 7)");

    auto* eb = app.add_subcommand("emit-bilinear",
                                  "write the bilinear map of a graph, "
                                  "presentation or construction tree");
    eb->add_option("path", path, "GRAPH, PRESENTATION or TREE file")->required();
    eb->add_option("--p", p, "prime");
    eb->add_option("--out", out_path, "output map file")->required();

    auto* sl = app.add_subcommand("slot",
                                  "decide the common slot property of a map "
                                  "file; report the quaternionic axioms at "
                                  "p=2");
    sl->add_option("path", path, "map file")->required();

    auto* hu = app.add_subcommand("hull",
                                  "degreewise dimensions of the purely "
                                  "quadratic algebra of a map file");
    hu->add_option("path", path, "map file")->required();
    hu->add_option("--dmax", dmax, "truncation degree (<= 4)");

    auto* ve = app.add_subcommand("verify", "run the verification suite");
    ve->add_option("--nmax", nmax, "largest vertex count (<= 6)");
    ve->add_option("--p", p, "prime");
    ve->add_option("--seed", seed, "seed for the random suites");
    ve->add_option("--format", format, "human or tsv")
        ->check(CLI::IsMember({"human", "tsv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!qgk::is_supported_prime(p)) {
            std::cerr << "error: unsupported prime " << p << "\n";
            return 2;
        }
        if (gc->parsed()) return cmd_graph_check(path, p);
        if (eb->parsed()) return cmd_emit_bilinear(path, p, out_path);
        if (sl->parsed()) return cmd_slot(path);
        if (hu->parsed()) return cmd_hull(path, dmax);
        if (ve->parsed()) {
            if (nmax > 6) {
                std::cerr << "error: --nmax must be <= 6\n";
                return 2;
            }
            return cmd_verify(nmax, p, seed, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
