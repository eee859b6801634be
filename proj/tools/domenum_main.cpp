#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "domenum/bench.hpp"
#include "domenum/cdom.hpp"
#include "domenum/errors.hpp"
#include "domenum/extensions.hpp"
#include "domenum/generator.hpp"
#include "domenum/io.hpp"
#include "domenum/oracles.hpp"
#include "domenum/recognition.hpp"
#include "domenum/reductions.hpp"
#include "domenum/separators.hpp"

namespace {

using namespace domenum;

constexpr int kExitOk = 0;
constexpr int kExitRecognition = 2;
constexpr int kExitIo = 3;
constexpr int kExitPrecondition = 4;

Graph load_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_edge_list(ss.str());
    }
    return read_edge_list_file(path);
}

Hypergraph load_hypergraph(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return parse_hypergraph(ss.str());
    }
    return read_hypergraph_file(path);
}

struct EnumerateOptions {
    std::string kind;
    std::string input;
    std::string format = "text";
    bool count_only = false;
    bool check_oracle = false;
    bool emit_timing = false;
    std::uint64_t max_solutions = 0;
};

int run_enumerate(const EnumerateOptions& opt) {
    Graph g = load_graph(opt.input);
    ProblemKind kind = parse_kind(opt.kind);

    std::vector<std::vector<std::string>> solutions;
    std::vector<std::uint64_t> work_marks;

    if (kind == ProblemKind::Cds) {
        DualizeStats stats;
        for (const auto& s : enumerate_mcds_ids(g, &stats)) solutions.push_back(s);
        work_marks = stats.emission_work;
    } else {
        DominationEnumerator en(g, kind == ProblemKind::Mds ? Mode::Closed : Mode::Open);
        while (auto ids = en.next_ids()) {
            solutions.push_back(*ids);
            work_marks.push_back(en.stats().work());
            if (opt.max_solutions && solutions.size() >= opt.max_solutions) break;
        }
    }
    if (opt.max_solutions && solutions.size() > opt.max_solutions)
        solutions.resize(opt.max_solutions);

    if (opt.check_oracle) {
        std::vector<Bitset> expected;
        switch (kind) {
            case ProblemKind::Mds: expected = brute_mds(g); break;
            case ProblemKind::Tds: expected = brute_mtds(g); break;
            case ProblemKind::Cds: expected = brute_mcds(g); break;
        }
        std::vector<Bitset> got;
        for (const auto& ids : solutions) got.push_back(g.set_of(ids));
        sort_family(got);
        if (got != expected) {
            std::cerr << "oracle mismatch: enumeration disagrees with the brute-force oracle\n";
            return 1;
        }
        std::cerr << "oracle check passed (" << expected.size() << " solutions)\n";
    }

    if (opt.count_only) {
        std::cout << solutions.size() << "\n";
        return kExitOk;
    }
    for (std::size_t k = 0; k < solutions.size(); ++k) {
        if (opt.format == "jsonl") {
            std::uint64_t w = k < work_marks.size() ? work_marks[k] : 0;
            std::cout << format_solution_jsonl(solutions[k], k, w) << "\n";
        } else {
            std::cout << format_solution(solutions[k]);
            if (opt.emit_timing && k < work_marks.size()) std::cout << "  # work=" << work_marks[k];
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_recognize(const std::string& input) {
    Graph g = load_graph(input);
    auto bp = bipartition(g);
    if (auto* odd = std::get_if<OddCycle>(&bp)) {
        std::cout << "bipartite: no\n";
        std::cout << "odd-cycle:";
        for (int v : odd->cycle) std::cout << " " << g.id_of(v);
        std::cout << "\nchordal-bipartite: no\n";
        return kExitRecognition;
    }
    std::cout << "bipartite: yes\n";
    auto order = weak_simplicial_ordering(g);
    if (!order) {
        std::cout << "chordal-bipartite: no\n";
        return kExitRecognition;
    }
    std::cout << "chordal-bipartite: yes\n";
    return kExitOk;
}

int run_order(const std::string& input) {
    Graph g = load_graph(input);
    auto order = weak_simplicial_ordering(g);
    if (!order) {
        std::cerr << "not chordal bipartite\n";
        return kExitRecognition;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < order->size(); ++i)
        out << (i ? " " : "") << g.id_of((*order)[i]);
    std::cout << out.str() << "\n";
    return kExitOk;
}

int run_separators(const std::string& input) {
    Graph g = load_graph(input);
    auto fam = minimal_separators(g);
    Hypergraph h(g, fam.sets);
    std::cout << emit_hypergraph(h);
    return kExitOk;
}

int run_conformality(const std::string& input, int max_c, bool check_oracle) {
    Hypergraph h = sperner_minimize(load_hypergraph(input));
    auto fast = conformality(h, max_c);
    if (check_oracle) {
        auto brute = brute_conformality(h, max_c);
        if (!(fast == brute)) {
            std::cerr << "conformality mismatch: fast characterization disagrees with the "
                         "definition sweep\n";
            return 1;
        }
    }
    if (fast.above_max)
        std::cout << "above-max\n";
    else
        std::cout << fast.c << "\n";
    return kExitOk;
}

int run_generate(int n, double density, std::uint64_t seed) {
    Graph g = generate_chordal_bipartite(n, density, seed);
    std::cout << emit_edge_list(g);
    return kExitOk;
}

MisInstance load_mis_instance(const std::string& graph_path, const std::string& classes_path) {
    MisInstance inst{load_graph(graph_path), {}};
    std::istringstream in(read_file(classes_path));
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> ids;
        std::string tok;
        while (ls >> tok) ids.push_back(tok);
        if (!ids.empty()) inst.classes.push_back(inst.g.set_of(ids));
    }
    return inst;
}

int run_reduce_mis(const std::string& input, const std::string& classes) {
    MisInstance inst = load_mis_instance(input, classes);
    MisReduction red = build_mis_reduction(inst);
    std::cout << "# mis reduction: " << red.h.n() << " vertices\n";
    std::cout << "# tstar:";
    for (const auto& id : red.h.ids_of(red.t_star)) std::cout << " " << id;
    std::cout << "\n# ordering:";
    for (int v : red.ordering) std::cout << " " << red.h.id_of(v);
    std::cout << "\n";
    for (const auto& [name, role] : red.roles) std::cout << "# role " << name << " " << role << "\n";
    std::cout << emit_edge_list(red.h);
    return kExitOk;
}

int run_reduce_trans(const std::string& input) {
    Hypergraph h = load_hypergraph(input);
    TransReduction red = build_transversal_reduction(h);
    std::cout << "# transversal reduction: " << red.g.n() << " vertices\n";
    std::cout << emit_edge_list(red.g);
    return kExitOk;
}

int run_verify_mis(const std::string& input, const std::string& classes, const std::string& mode) {
    MisInstance inst = load_mis_instance(input, classes);
    MisReduction red = build_mis_reduction(inst);
    Mode m = mode == "open" ? Mode::Open : Mode::Closed;
    auto report = verify_mis_children(red, m);
    std::cout << "tstar-minimal-transversal: " << (report.t_star_ok ? "yes" : "no") << "\n";
    std::cout << "children: " << report.children << "\n";
    std::cout << "expected (multicolored IS + 1): " << report.expected << "\n";
    std::cout << "bodies-match: " << (report.bodies_match ? "yes" : "no") << "\n";
    return report.t_star_ok && report.bodies_match ? kExitOk : 1;
}

int run_verify_trans(const std::string& input) {
    Hypergraph h = load_hypergraph(input);
    TransReduction red = build_transversal_reduction(h);
    auto report = verify_separator_structure(red);
    std::cout << "separator-structure: " << (report.matches ? "match" : "MISMATCH") << "\n";

    auto mcds = brute_mcds(red.g);
    auto tr = brute_transversals(red.h);
    bool bijective = mcds.size() == tr.size();
    std::vector<Bitset> mapped;
    for (const auto& d : mcds) {
        auto ids = mcds_to_transversal(red, red.g.ids_of(d));
        Bitset t(red.h.n());
        for (const auto& id : ids) t.set(red.h.index_of(id));
        mapped.push_back(t);
    }
    sort_family(mapped);
    bijective = bijective && mapped == tr;
    std::cout << "mcds-transversal-bijection: " << (bijective ? "match" : "MISMATCH") << "\n";
    return report.matches && bijective ? kExitOk : 1;
}

int run_bench(const std::string& kind, const std::string& family, const std::vector<int>& sizes,
              double density, std::uint64_t seed, std::uint64_t max_solutions) {
    ProblemKind k = parse_kind(kind);
    std::cout << delay_csv_header() << "\n";
    for (int n : sizes) {
        Graph g;
        if (family == "k2n")
            g = make_k2n(n);
        else if (family == "path")
            g = make_path(n);
        else if (family == "generated")
            g = generate_chordal_bipartite(n, density, seed + n);
        else
            throw Error("unknown family: " + family);
        auto report = measure_delays(g, k, max_solutions, family);
        std::cout << delay_csv_row(report) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal (total/connected) dominating set enumeration for chordal bipartite "
                 "graphs"};
    app.require_subcommand(1);

    EnumerateOptions eopt;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate minimal solutions");
    enumerate->add_option("kind", eopt.kind, "mds | tds | cds")->required();
    enumerate->add_option("-i,--input", eopt.input, "edge-list file ('-' for stdin)")->required();
    enumerate->add_option("--format", eopt.format, "text | jsonl");
    enumerate->add_flag("--count-only", eopt.count_only, "print only the number of solutions");
    enumerate->add_flag("--check-oracle", eopt.check_oracle,
                        "verify against the brute-force oracle (small inputs)");
    enumerate->add_flag("--emit-timing", eopt.emit_timing, "append per-solution work counters");
    enumerate->add_option("--max-solutions", eopt.max_solutions, "stop after this many solutions");

    std::string input;
    auto* recognize = app.add_subcommand("recognize", "Chordal-bipartite recognition");
    recognize->add_option("-i,--input", input, "edge-list file")->required();

    std::string order_input;
    auto* order = app.add_subcommand("order", "Weak-simplicial elimination ordering");
    order->add_option("-i,--input", order_input, "edge-list file")->required();

    std::string sep_input;
    auto* separators = app.add_subcommand("separators", "Emit the minimal separators of a graph");
    separators->add_option("-i,--input", sep_input, "edge-list file")->required();

    std::string conf_input;
    int conf_max = 5;
    bool conf_check = false;
    auto* conf = app.add_subcommand("conformality", "Conformality of a hypergraph");
    conf->add_option("-i,--input", conf_input, "hypergraph file")->required();
    conf->add_option("--max", conf_max, "largest conformality to certify");
    conf->add_flag("--check-oracle", conf_check, "cross-check with the definition sweep");

    int gen_n = 0;
    double gen_density = 0.3;
    std::uint64_t gen_seed = 1;
    auto* generate = app.add_subcommand("generate", "Generate a random chordal bipartite graph");
    generate->add_option("-n,--vertices", gen_n, "vertex count")->required();
    generate->add_option("--density", gen_density, "target edge density in [0,1]");
    generate->add_option("--seed", gen_seed, "random seed");

    std::string red_kind, red_input, red_classes;
    auto* reduce = app.add_subcommand("reduce", "Build a hardness-reduction instance");
    reduce->add_option("kind", red_kind, "mis | trans")->required();
    reduce->add_option("-i,--input", red_input, "edge-list (mis) or hypergraph (trans) file")
        ->required();
    reduce->add_option("--classes", red_classes, "color classes file (one class per line)");

    std::string ver_kind, ver_input, ver_classes, ver_mode = "closed";
    auto* verify = app.add_subcommand("verify", "Verify reduction structure claims");
    verify->add_option("kind", ver_kind, "mis | trans")->required();
    verify->add_option("-i,--input", ver_input, "edge-list (mis) or hypergraph (trans) file")
        ->required();
    verify->add_option("--classes", ver_classes, "color classes file (mis)");
    verify->add_option("--mode", ver_mode, "closed | open (mis)");

    std::string bench_kind = "mds", bench_family = "k2n", bench_sizes = "10,20,40";
    double bench_density = 0.3;
    std::uint64_t bench_seed = 42, bench_max = 20000;
    auto* bench = app.add_subcommand("bench", "Delay benchmarking (work counters, CSV)");
    bench->add_option("--kind", bench_kind, "mds | tds | cds");
    bench->add_option("--family", bench_family, "k2n | path | generated");
    bench->add_option("--sizes", bench_sizes, "comma-separated sizes");
    bench->add_option("--density", bench_density, "density for generated family");
    bench->add_option("--seed", bench_seed, "seed for generated family");
    bench->add_option("--max-solutions", bench_max, "per-run solution cap (0 = none)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return run_enumerate(eopt);
        if (recognize->parsed()) return run_recognize(input);
        if (order->parsed()) return run_order(order_input);
        if (separators->parsed()) return run_separators(sep_input);
        if (conf->parsed()) return run_conformality(conf_input, conf_max, conf_check);
        if (generate->parsed()) return run_generate(gen_n, gen_density, gen_seed);
        if (reduce->parsed()) {
            if (red_kind == "mis") return run_reduce_mis(red_input, red_classes);
            if (red_kind == "trans") return run_reduce_trans(red_input);
            throw Error("unknown reduction kind: " + red_kind);
        }
        if (verify->parsed()) {
            if (ver_kind == "mis") return run_verify_mis(ver_input, ver_classes, ver_mode);
            if (ver_kind == "trans") return run_verify_trans(ver_input);
            throw Error("unknown verification kind: " + ver_kind);
        }
        if (bench->parsed()) {
            std::vector<int> sizes;
            std::stringstream ss(bench_sizes);
            std::string tok;
            while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
            return run_bench(bench_kind, bench_family, sizes, bench_density, bench_seed,
                             bench_max);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NotChordalBipartiteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRecognition;
    } catch (const IsolatedVertexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
