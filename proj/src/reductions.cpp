#include "domenum/reductions.hpp"

#include <algorithm>

#include "domenum/errors.hpp"
#include "domenum/oracles.hpp"
#include "domenum/seq_engine.hpp"

namespace domenum {

namespace {

std::string class_name(int i) { return "c:" + std::to_string(i + 1); }
std::string x_name(int j, int i) {
    return "x:" + std::to_string(j) + ":" + std::to_string(i + 1);
}
std::string y_name(int j, const std::string& u, const std::string& v) {
    return "y:" + std::to_string(j) + ":" + (u < v ? u + "~" + v : v + "~" + u);
}
std::string z_name(int j, const std::string& v) { return "z:" + std::to_string(j) + ":" + v; }
std::string orig_name(const std::string& v) { return "v:" + v; }

}  // namespace

MisReduction build_mis_reduction(const MisInstance& inst) {
    const Graph& g = inst.g;
    Bitset covered(g.n());
    for (const auto& cls : inst.classes) {
        if ((covered & cls).any()) throw InvalidPartitionError("classes overlap");
        covered |= cls;
        auto members = cls.indices();
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (g.adjacent(members[a], members[b]))
                    throw InvalidPartitionError("class is not an independent set");
    }
    if (covered != g.vertex_set()) throw InvalidPartitionError("classes do not cover V");

    MisReduction red;
    red.instance = inst;
    Graph::Builder b;
    std::vector<std::string> t_star_names;

    for (int v = 0; v < g.n(); ++v) {
        b.add_vertex(orig_name(g.id_of(v)));
        red.roles[orig_name(g.id_of(v))] = "original";
    }
    for (int i = 0; i < int(inst.classes.size()); ++i) {
        b.add_edge(x_name(1, i), x_name(2, i));
        b.add_edge(x_name(2, i), x_name(3, i));
        b.add_edge(x_name(3, i), x_name(4, i));
        b.add_edge(class_name(i), x_name(4, i));
        inst.classes[i].for_each(
            [&](int v) { b.add_edge(class_name(i), orig_name(g.id_of(v))); });
        b.add_edge("alpha", class_name(i));
        t_star_names.push_back(x_name(2, i));
        t_star_names.push_back(x_name(3, i));
        red.roles[class_name(i)] = "colorClass";
        for (int j = 1; j <= 4; ++j) red.roles[x_name(j, i)] = "x" + std::to_string(j);
    }
    for (int u = 0; u < g.n(); ++u) {
        g.neighbors(u).for_each([&](int v) {
            if (u >= v) return;
            const std::string ui = g.id_of(u), vi = g.id_of(v);
            b.add_edge(y_name(1, ui, vi), y_name(2, ui, vi));
            b.add_edge(y_name(2, ui, vi), y_name(3, ui, vi));
            b.add_edge(y_name(3, ui, vi), y_name(4, ui, vi));
            b.add_edge(y_name(3, ui, vi), y_name(5, ui, vi));
            b.add_edge(y_name(4, ui, vi), orig_name(ui));
            b.add_edge(y_name(5, ui, vi), orig_name(vi));
            t_star_names.push_back(y_name(2, ui, vi));
            t_star_names.push_back(y_name(3, ui, vi));
            for (int j = 1; j <= 5; ++j) red.roles[y_name(j, ui, vi)] = "y" + std::to_string(j);
        });
    }
    for (int v = 0; v < g.n(); ++v) {
        const std::string vi = g.id_of(v);
        b.add_edge(z_name(1, vi), z_name(2, vi));
        b.add_edge(z_name(2, vi), z_name(3, vi));
        b.add_edge(z_name(3, vi), z_name(4, vi));
        b.add_edge(orig_name(vi), z_name(3, vi));
        t_star_names.push_back(z_name(2, vi));
        t_star_names.push_back(z_name(3, vi));
        for (int j = 1; j <= 4; ++j) red.roles[z_name(j, vi)] = "z" + std::to_string(j);
    }
    b.add_edge("alpha", "beta");
    red.roles["alpha"] = "alpha";
    red.roles["beta"] = "beta";

    red.h = b.build();
    red.t_star = Bitset(red.h.n());
    for (const auto& name : t_star_names) red.t_star.set(red.h.index_of(name));

    // Ordering: every gadget vertex by name, then alpha, then beta.
    std::vector<std::string> names = red.h.ids();
    names.erase(std::remove(names.begin(), names.end(), std::string("alpha")), names.end());
    names.erase(std::remove(names.begin(), names.end(), std::string("beta")), names.end());
    std::sort(names.begin(), names.end());
    names.push_back("alpha");
    names.push_back("beta");
    for (const auto& name : names) red.ordering.push_back(red.h.index_of(name));
    return red;
}

std::vector<Bitset> multicolored_independent_sets(const MisInstance& inst) {
    const Graph& g = inst.g;
    std::vector<Bitset> out;
    Bitset chosen(g.n());
    auto rec = [&](auto&& self, std::size_t cls) -> void {
        if (cls == inst.classes.size()) {
            out.push_back(chosen);
            return;
        }
        inst.classes[cls].for_each([&](int v) {
            bool clash = (g.neighbors(v) & chosen).any();
            if (clash) return;
            chosen.set(v);
            self(self, cls + 1);
            chosen.reset(v);
        });
    };
    rec(rec, 0);
    return out;
}

MisChildrenReport verify_mis_children(const MisReduction& red, Mode mode) {
    MisChildrenReport report;
    const Graph& h = red.h;
    const int n = h.n();
    OrderedHypergraph oh = neighborhood_ordered_hypergraph(h, mode, red.ordering);

    report.t_star_ok = is_minimal_transversal(oh.edges_up_to(n - 2), red.t_star);

    auto kids = children(oh, red.t_star, n - 2, make_brute_extension_oracle());
    std::vector<Bitset> expected;
    Bitset alpha_child = red.t_star;
    alpha_child.set(h.index_of("alpha"));
    expected.push_back(alpha_child);
    for (const auto& is : multicolored_independent_sets(red.instance)) {
        Bitset child = red.t_star;
        is.for_each([&](int v) { child.set(h.index_of(orig_name(red.instance.g.id_of(v)))); });
        expected.push_back(child);
    }
    sort_family(expected);
    sort_family(kids);
    report.children = kids.size();
    report.expected = expected.size();
    report.bodies_match = kids == expected;
    for (const auto& k : kids)
        if (!std::binary_search(expected.begin(), expected.end(), k, BitsetLess{}))
            report.extra.push_back(k);
    for (const auto& e : expected)
        if (!std::binary_search(kids.begin(), kids.end(), e, BitsetLess{}))
            report.missing.push_back(e);
    return report;
}

TransReduction build_transversal_reduction(const Hypergraph& h) {
    for (const auto& e : h.edges())
        if (e.none()) throw EmptyEdgeError();
    if (!is_sperner(h))
        throw NotSpernerError("input hypergraph must be Sperner (run sperner_minimize first)");
    Bitset support = h.support();
    for (int v = 0; v < h.n(); ++v)
        if (!support.test(v)) throw UncoveredVertexError(h.id_of(v));

    // Canonical edge numbering: lexicographic on the edge sets.
    std::vector<Bitset> edges = h.edges();
    sort_family(edges);

    TransReduction red;
    red.h = Hypergraph(h.ids(), {});
    red.h.replace_edges(edges);

    Graph::Builder b;
    b.add_edge("vprime", "vstar");
    for (int v = 0; v < h.n(); ++v) b.add_edge("vstar", orig_name(h.id_of(v)));
    for (int j = 0; j < int(edges.size()); ++j) {
        const std::string ej = "e:" + std::to_string(j + 1);
        edges[j].for_each([&](int v) { b.add_edge(ej, orig_name(h.id_of(v))); });
    }
    red.g = b.build();
    red.v_prime = red.g.index_of("vprime");
    red.v_star = red.g.index_of("vstar");
    red.vertex_of.resize(h.n());
    for (int v = 0; v < h.n(); ++v) red.vertex_of[v] = red.g.index_of(orig_name(h.id_of(v)));
    red.edge_of.resize(edges.size());
    for (int j = 0; j < int(edges.size()); ++j)
        red.edge_of[j] = red.g.index_of("e:" + std::to_string(j + 1));
    return red;
}

SeparatorStructureReport verify_separator_structure(const TransReduction& red) {
    SeparatorStructureReport report;
    report.found = brute_separators(red.g, /*minimal_only=*/true);
    for (int j : red.edge_of) report.expected.push_back(red.g.neighbors(j));
    report.expected.push_back(Bitset::of(red.g.n(), {red.v_star}));
    sort_family(report.expected);
    report.matches = report.found == report.expected;
    return report;
}

std::vector<std::string> mcds_to_transversal(const TransReduction& red,
                                             const std::vector<std::string>& t_g) {
    bool has_star = false;
    std::vector<std::string> out;
    for (const auto& id : t_g) {
        if (id == "vstar") {
            has_star = true;
            continue;
        }
        if (id.rfind("v:", 0) != 0)
            throw Error("unexpected vertex in connected dominating set: " + id);
        out.push_back(red.h.id_of(red.h.index_of(id.substr(2))));
    }
    if (!has_star) throw MissingVStarError();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace domenum
