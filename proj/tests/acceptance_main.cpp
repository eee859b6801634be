// Acceptance suite: one pass/fail line per criterion, exit code counts the
// failures. Criteria 1-4 and 7 share two corpora (the exhaustive small
// connected sweep and a generated family); the rest are standalone.

#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "domenum/bench.hpp"
#include "domenum/cdom.hpp"
#include "domenum/extensions.hpp"
#include "domenum/generator.hpp"
#include "domenum/io.hpp"
#include "domenum/oracles.hpp"
#include "domenum/recognition.hpp"
#include "domenum/reductions.hpp"
#include "domenum/separators.hpp"
#include "test_helpers.hpp"

using namespace domenum;
namespace dt = domenum::testing;

namespace {

struct Criterion {
    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}

    int id;
    std::string name;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// fast mask-level filters for the exhaustive sweep
// ---------------------------------------------------------------------------

struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> adj{};
};

SmallGraph small_from_mask(int n, std::uint32_t mask) {
    SmallGraph g;
    g.n = n;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) {
                g.adj[u] |= std::uint8_t(1) << v;
                g.adj[v] |= std::uint8_t(1) << u;
            }
    return g;
}

bool small_connected(const SmallGraph& g) {
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint8_t(1) << g.n) - 1;
}

bool small_bipartite(const SmallGraph& g) {
    std::array<int, 8> color{};
    color.fill(-1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.n; ++v) {
                if (!((g.adj[u] >> v) & 1)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// shared per-graph checks for criteria 1-4 and 7
// ---------------------------------------------------------------------------

struct SweepState {
    Criterion* c1;
    Criterion* c2;
    Criterion* c3;
    Criterion* c4;
    Criterion* c7;
    std::uint64_t graphs = 0;
    std::uint64_t harvested = 0;
    std::uint64_t harvest_budget = 6000;
    std::uint64_t mds_graphs = 0, tds_graphs = 0, cds_graphs = 0, sep_compared = 0;
};

void harvest_extension_checks(SweepState& st, const Graph& g, Mode mode) {
    if (st.harvested >= st.harvest_budget || g.n() > 12) {
        // still run the enumeration elsewhere; harvesting only is skipped
        return;
    }
    auto oh = domination_hypergraph(g, mode);
    auto oracle = make_domination_oracle(g, mode);
    NodeHook hook = [&](const Bitset& t_star, int i, const DeltaFamily& d,
                        const std::vector<Bitset>& exts) {
        if (d.edges.empty() || st.harvested >= st.harvest_budget) return;
        ++st.harvested;
        auto brute = brute_extension_oracle(oh, t_star, i, d);
        auto got = exts;
        sort_family(got);
        if (got != brute.extensions) {
            st.c4->fail("extension oracle mismatch on a harvested node (" +
                        std::string(mode == Mode::Closed ? "closed" : "open") + ", n=" +
                        std::to_string(g.n()) + ")");
            return;
        }
        if (mode == Mode::Closed) {
            auto ci = build_chain_instance(g, oh, t_star, i, Mode::Closed, d);
            for (const auto& z : exts) {
                int shape = classify_mds_extension(ci, z);
                if (shape < 1 || shape > 4) {
                    st.c4->fail("extension outside the four shapes");
                    continue;
                }
                bool shape_ok = true;
                switch (shape) {
                    case 1: shape_ok = z == Bitset::of(g.n(), {ci.v_next}); break;
                    case 2: shape_ok = z == ci.blue; break;
                    case 3: shape_ok = z.count() <= 2 && z.subset_of(ci.red); break;
                    case 4: {
                        Bitset far = z & ci.second_nbhd;
                        if (far.count() != 1) {
                            shape_ok = false;
                            break;
                        }
                        int r = far.first();
                        Bitset canonical = ci.blue - g.neighbors(r);
                        canonical.set(r);
                        shape_ok = z == canonical ||
                                   (ci.blue.subset_of(g.neighbors(r)) && z.count() == 2 &&
                                    (z - far).subset_of(ci.blue));
                        break;
                    }
                }
                if (!shape_ok) st.c4->fail("case shape violated at a harvested node");
                if ((z & ci.red & g.neighbors(ci.v_next)).count() > 1 ||
                    (z & ci.second_nbhd).count() > 1)
                    st.c4->fail("red-part inequality violated");
            }
        }
    };
    TransversalEnumerator en(oh, oracle, hook);
    while (en.next()) {
    }
}

void check_graph(SweepState& st, const Graph& g, bool cds_in_scope) {
    ++st.graphs;

    // criterion 1: minimal dominating sets against the oracle
    {
        auto got = enumerate_mds(g);
        sort_family(got);
        if (got != brute_mds(g))
            st.c1->fail("mds mismatch on a graph with n=" + std::to_string(g.n()));
        ++st.mds_graphs;
    }
    // criterion 2: total domination (isolate-free inputs only)
    bool isolated = false;
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).none()) isolated = true;
    if (!isolated && g.n() >= 2) {
        auto got = enumerate_mtds(g);
        sort_family(got);
        if (got != brute_mtds(g))
            st.c2->fail("tds mismatch on a graph with n=" + std::to_string(g.n()));
        ++st.tds_graphs;
    }
    // criterion 3: connected domination plus the separator identity
    if (cds_in_scope && g.n() <= 13 && is_connected(g)) {
        auto got = enumerate_mcds(g);
        sort_family(got);
        auto expect = brute_mcds(g);
        if (got != expect)
            st.c3->fail("cds mismatch on a graph with n=" + std::to_string(g.n()));
        auto seps = brute_separators(g, true);
        if (!seps.empty()) {
            Hypergraph sh(g, seps);
            if (brute_transversals(sh) != expect)
                st.c3->fail("mcds != Tr(S(G)) via the brute oracles");
        }
        ++st.cds_graphs;
    }
    // criterion 7: separator properties
    {
        auto fam = minimal_separators(g).sets;
        for (const auto& s : fam) {
            if (!check_complete_bipartite_separator(g, s))
                st.c7->fail("separator not complete bipartite");
            if (close_components(g, s).size() < 2) st.c7->fail("separator with <2 close components");
            auto comps = components(g, s);
            auto bp = bipartition(g);
            if (auto* sides = std::get_if<Bipartition>(&bp)) {
                for (int ci : close_components(g, s)) {
                    for (const Bitset* side : {&sides->side_a, &sides->side_b}) {
                        if (!(s & *side).any()) continue;
                        bool found = false;
                        comps[ci].for_each([&](int x) {
                            if ((g.neighbors(x) & s) == (s & *side)) found = true;
                        });
                        if (!found) st.c7->fail("close-neighbor property violated");
                    }
                }
            }
        }
        if (g.n() <= 10) {
            if (fam != brute_separators(g, true))
                st.c7->fail("S(G) routine disagrees with the brute oracle");
            ++st.sep_compared;
        }
    }
}

// ---------------------------------------------------------------------------

void criteria_1_to_4_and_7(std::vector<Criterion>& out) {
    Criterion c1{1, "mds oracle equivalence (exhaustive <=7 + 200 generated <=14)"};
    Criterion c2{2, "tds oracle equivalence on the same corpus"};
    Criterion c3{3, "cds oracle equivalence and mcds = Tr(S(G)) (n<=13)"};
    Criterion c4{4, "extension oracles exact on >=500 harvested nodes, shapes + red-part"};
    Criterion c7{7, "separator properties and S(G) = brute family (n<=10)"};
    auto start = std::chrono::steady_clock::now();

    SweepState st{&c1, &c2, &c3, &c4, &c7};

    // (a) every connected chordal bipartite graph on at most 7 vertices
    std::uint64_t exhaustive = 0;
    for (int n = 1; n <= 7; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << bits); ++mask) {
            SmallGraph sg = small_from_mask(n, mask);
            if (!small_connected(sg)) continue;
            if (!small_bipartite(sg)) continue;
            Graph g = dt::graph_from_mask(n, mask);
            if (find_long_induced_cycle(g, 6).has_value()) continue;
            ++exhaustive;
            check_graph(st, g, /*cds_in_scope=*/true);
        }
    }
    c1.note("exhaustive connected chordal bipartite graphs: " + std::to_string(exhaustive));

    // (b) 200 generated graphs with n <= 14
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 13;  // 2..14
        double density = 0.15 + 0.2 * (trial % 4);
        Graph g = generate_chordal_bipartite(n, density, 100000 + trial);
        check_graph(st, g, /*cds_in_scope=*/true);
        harvest_extension_checks(st, g, Mode::Closed);
        bool isolated = false;
        for (int v = 0; v < g.n(); ++v)
            if (g.neighbors(v).none()) isolated = true;
        if (!isolated && g.n() >= 2) harvest_extension_checks(st, g, Mode::Open);
    }

    if (st.harvested < 500)
        c4.fail("only " + std::to_string(st.harvested) + " nodes harvested");
    c4.note("harvested nodes: " + std::to_string(st.harvested));
    c1.note("graphs checked: " + std::to_string(st.mds_graphs));
    c2.note("graphs checked: " + std::to_string(st.tds_graphs));
    c3.note("graphs checked: " + std::to_string(st.cds_graphs));
    c7.note("brute-separator comparisons: " + std::to_string(st.sep_compared));

    double elapsed = seconds_since(start);
    c1.note("runtime " + std::to_string(int(elapsed)) + "s (600s budget)");
    if (elapsed > 600) c1.fail("runtime budget exceeded");

    out.push_back(c1);
    out.push_back(c2);
    out.push_back(c3);
    out.push_back(c4);
    out.push_back(c7);
}

Criterion criterion_5() {
    Criterion c{5, "delay evidence on K_{2,n} and generated families (pool bound hard)"};
    std::ostringstream csv;
    csv << delay_csv_header() << "\n";
    for (ProblemKind kind : {ProblemKind::Mds, ProblemKind::Tds}) {
        for (const std::string family : {"k2n", "generated"}) {
            double prev_ratio = -1;
            for (int n : {10, 20, 40, 80}) {
                Graph g = family == "k2n" ? make_k2n(n)
                                          : generate_chordal_bipartite(n, 0.3, 424242 + n);
                auto r = measure_delays(g, kind, 20000, family);
                csv << delay_csv_row(r) << "\n";
                std::uint64_t bound = std::uint64_t(g.n()) * g.n() + g.n() + 2;
                if (r.pool_max > bound)
                    c.fail("pool bound violated: " + std::to_string(r.pool_max) + " > " +
                           std::to_string(bound) + " (" + family + ", n=" + std::to_string(n) +
                           ")");
                double ratio = double(r.max_delay) / (double(g.n()) * g.n() * g.n() * g.n());
                if (prev_ratio > 0 && ratio > 10 * prev_ratio)
                    c.note("soft regression flag: delay/n^4 grew >10x at " + family + " n=" +
                           std::to_string(n) + " (" + r.kind + ")");
                prev_ratio = ratio;
            }
        }
    }
    // connected-domination runs report per-solution work growth
    for (int n : {10, 20, 40, 80}) {
        auto r = measure_delays(make_path(n), ProblemKind::Cds, 20000, "path");
        csv << delay_csv_row(r) << "\n";
    }
    std::cout << csv.str();
    return c;
}

Criterion criterion_6() {
    Criterion c{6, "conformality of S(G) <= 5; fast characterization = definition"};
    int structured = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + trial % 9;  // 4..12
        Graph g = generate_chordal_bipartite(n, 0.2 + 0.2 * (trial % 4), 200000 + trial);
        auto seps = minimal_separators(g).sets;
        if (seps.empty()) continue;
        ++structured;
        Hypergraph sh(g, seps);
        auto brute = brute_conformality(sh, 6);
        if (brute.above_max || brute.c > 5)
            c.fail("separator family with conformality above 5 (n=" + std::to_string(n) + ")");
        if (!(conformality(sh, 6) == brute)) c.fail("fast/brute disagreement on S(G)");
    }
    c.note("separator families checked: " + std::to_string(structured));
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 10);
        Hypergraph h = sperner_minimize(dt::random_hypergraph(n, 8, rng));
        if (!(conformality(h, 6) == brute_conformality(h, 6)))
            c.fail("fast/brute disagreement on a random hypergraph");
    }
    return c;
}

Criterion criterion_8() {
    Criterion c{8, "children structure of the multicolored-IS construction (both modes)"};
    std::mt19937_64 rng(307);
    int closed_ok = 0, open_ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + int(rng() % 5);
        int k = 1 + int(rng() % std::min(3, n));
        std::vector<int> cls(n);
        for (int v = 0; v < n; ++v) cls[v] = int(rng() % k);
        Graph::Builder b;
        for (int v = 0; v < n; ++v) b.add_vertex(dt::kNames[v]);
        std::bernoulli_distribution coin(0.45);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (cls[u] != cls[v] && coin(rng)) b.add_edge(dt::kNames[u], dt::kNames[v]);
        Graph g = b.build();
        MisInstance inst{g, {}};
        for (int cc = 0; cc < k; ++cc) {
            Bitset cb(n);
            for (int v = 0; v < n; ++v)
                if (cls[v] == cc) cb.set(v);
            if (cb.any()) inst.classes.push_back(cb);
        }
        auto red = build_mis_reduction(inst);

        auto closed = verify_mis_children(red, Mode::Closed);
        if (closed.t_star_ok && closed.bodies_match &&
            closed.children == multicolored_independent_sets(inst).size() + 1)
            ++closed_ok;
        else
            c.fail("closed-mode children mismatch at trial " + std::to_string(trial));

        auto open = verify_mis_children(red, Mode::Open);
        if (open.t_star_ok && open.bodies_match &&
            open.children == multicolored_independent_sets(inst).size() + 1)
            ++open_ok;
    }
    c.note("closed mode: " + std::to_string(closed_ok) + "/50");
    c.note("open mode: " + std::to_string(open_ok) + "/50");
    if (open_ok < 50)
        c.fail("open-mode children exceed the independent-set family: in the open hypergraph "
               "the x4 gadget vertex keeps the class vertex's neighborhood as a private edge "
               "and stands in for a class pick, and edge gadgets no longer forbid adjacent "
               "pairs (y3 retains N(y2) as a private edge), so the stated equality cannot hold "
               "for this construction");
    return c;
}

Criterion criterion_9() {
    Criterion c{9, "incidence reduction: separator structure and mcds/Tr bijection"};
    std::mt19937_64 rng(401);
    int done = 0;
    for (int trial = 0; done < 50; ++trial) {
        int n = 3 + int(rng() % 5);  // up to 7 vertices
        Hypergraph h0 = sperner_minimize(dt::random_hypergraph(n, 5, rng));
        Bitset support = h0.support();
        std::vector<std::string> used;
        support.for_each([&](int v) { used.push_back(h0.id_of(v)); });
        Hypergraph h(used, h0.edges_as_ids());
        ++done;
        auto red = build_transversal_reduction(h);
        if (!verify_separator_structure(red).matches) {
            c.fail("separator structure mismatch at trial " + std::to_string(trial));
            continue;
        }
        auto mcds = brute_mcds(red.g);
        auto tr = brute_transversals(red.h);
        if (mcds.size() != tr.size()) {
            c.fail("family sizes differ at trial " + std::to_string(trial));
            continue;
        }
        std::vector<Bitset> mapped;
        bool round_trip = true;
        for (const auto& d : mcds) {
            auto ids = mcds_to_transversal(red, red.g.ids_of(d));
            Bitset t(red.h.n());
            for (const auto& id : ids) t.set(red.h.index_of(id));
            mapped.push_back(t);
            // round trip: the transversal plus the apex recovers d
            Bitset back(red.g.n());
            back.set(red.v_star);
            for (const auto& id : ids) back.set(red.g.index_of("v:" + id));
            if (back != d) round_trip = false;
        }
        sort_family(mapped);
        if (mapped != tr || !round_trip)
            c.fail("bijection failed at trial " + std::to_string(trial));
    }
    c.note("instances checked: 50");
    return c;
}

Criterion criterion_10() {
    Criterion c{10, "P4/C4 regression, byte-stable, oracle-verified families"};
    Graph p4 = dt::path(4);
    Graph c4 = dt::c4_named();

    auto render_dom = [](const Graph& g, Mode mode) {
        DominationEnumerator en(g, mode);
        std::ostringstream out;
        while (auto ids = en.next_ids()) out << format_solution(*ids) << "\n";
        return out.str();
    };
    auto render_cds = [](const Graph& g) {
        std::ostringstream out;
        for (const auto& ids : enumerate_mcds_ids(g)) out << format_solution(ids) << "\n";
        return out.str();
    };
    auto family_of = [](const Graph& g, const std::string& text) {
        std::vector<Bitset> fam;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<std::string> ids;
            std::string tok;
            while (ls >> tok) ids.push_back(tok);
            fam.push_back(g.set_of(ids));
        }
        sort_family(fam);
        return fam;
    };

    struct Case {
        const char* label;
        const Graph* g;
        int mode;  // 0 mds, 1 tds, 2 cds
        std::vector<std::vector<std::string>> expected;
    };
    std::vector<Case> cases = {
        {"p4 mds", &p4, 0, {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}}},
        {"p4 tds", &p4, 1, {{"b", "c"}}},
        {"p4 cds", &p4, 2, {{"b", "c"}}},
        {"c4 mds", &c4, 0,
         {{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}}},
        {"c4 tds", &c4, 1, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "v4"}}},
        {"c4 cds", &c4, 2, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "v4"}}},
    };
    for (const auto& cs : cases) {
        auto render = [&] {
            if (cs.mode == 0) return render_dom(*cs.g, Mode::Closed);
            if (cs.mode == 1) return render_dom(*cs.g, Mode::Open);
            return render_cds(*cs.g);
        };
        std::string once = render();
        std::string twice = render();
        if (once != twice) c.fail(std::string(cs.label) + " not byte-stable");
        std::vector<Bitset> expected;
        for (const auto& ids : cs.expected) expected.push_back(cs.g->set_of(ids));
        sort_family(expected);
        if (family_of(*cs.g, once) != expected)
            c.fail(std::string(cs.label) + " family mismatch");
        // anchor the frozen families to the oracles
        std::vector<Bitset> oracle;
        if (cs.mode == 0) oracle = brute_mds(*cs.g);
        if (cs.mode == 1) oracle = brute_mtds(*cs.g);
        if (cs.mode == 2) oracle = brute_mcds(*cs.g);
        if (oracle != expected) c.fail(std::string(cs.label) + " frozen value not oracle-backed");
    }
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::optional<int> only;
    if (argc > 1) only = std::atoi(argv[1]);

    std::vector<Criterion> results;
    auto wants = [&](int id) { return !only || *only == id; };

    if (wants(1) || wants(2) || wants(3) || wants(4) || wants(7))
        criteria_1_to_4_and_7(results);
    if (wants(5)) results.push_back(criterion_5());
    if (wants(6)) results.push_back(criterion_6());
    if (wants(8)) results.push_back(criterion_8());
    if (wants(9)) results.push_back(criterion_9());
    if (wants(10)) results.push_back(criterion_10());

    std::sort(results.begin(), results.end(),
              [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    int failures = 0;
    for (const auto& r : results) {
        if (only && r.id != *only) continue;
        std::cout << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures ? "ACCEPTANCE: FAILURES PRESENT" : "ACCEPTANCE: ALL PASS") << " ("
              << results.size() - failures << "/" << results.size() << ")\n";
    return failures;
}
