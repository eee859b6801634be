#include "domenum/separators.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "domenum/errors.hpp"

namespace domenum {

namespace {

/// Component of `b` in G - removed, or an empty set if b is removed.
Bitset component_of(const Graph& g, int b, const Bitset& removed) {
    Bitset comp(g.n());
    if (removed.test(b)) return comp;
    comp.set(b);
    std::vector<int> stack{b};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.neighbors(u).for_each([&](int w) {
            if (!removed.test(w) && !comp.test(w)) {
                comp.set(w);
                stack.push_back(w);
            }
        });
    }
    return comp;
}

Bitset neighborhood_of_set(const Graph& g, const Bitset& s) {
    Bitset out(g.n());
    s.for_each([&](int v) { out |= g.neighbors(v); });
    out -= s;
    return out;
}

}  // namespace

SeparatorFamily ab_minimal_separators(const Graph& g, int a, int b) {
    if (a == b) throw AdjacentPairError("a and b must be distinct");
    if (g.adjacent(a, b))
        throw AdjacentPairError("no a-b separator exists for adjacent vertices " + g.id_of(a) +
                                ", " + g.id_of(b));
    SeparatorFamily fam;
    fam.source = SeparatorFamily::Source::AbFamily;

    std::unordered_set<Bitset, BitsetHash> seen;
    std::queue<Bitset> todo;

    auto push = [&](const Bitset& removed) {
        Bitset cb = component_of(g, b, removed);
        if (cb.none()) return;
        Bitset sep = neighborhood_of_set(g, cb);
        if (seen.insert(sep).second) {
            fam.sets.push_back(sep);
            todo.push(sep);
        }
    };

    push(g.closed_neighbors(a));  // separator close to a
    while (!todo.empty()) {
        Bitset s = todo.front();
        todo.pop();
        s.for_each([&](int x) {
            if (g.adjacent(x, b)) return;
            Bitset removed = s;
            removed.reset(x);
            removed |= g.neighbors(x);
            push(removed);
        });
    }
    sort_family(fam.sets);
    return fam;
}

SeparatorFamily ab_minimal_separators(const Graph& g, const std::string& a, const std::string& b) {
    return ab_minimal_separators(g, g.index_of(a), g.index_of(b));
}

SeparatorFamily minimal_separators(const Graph& g) {
    std::unordered_set<Bitset, BitsetHash> all;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            if (g.adjacent(a, b)) continue;
            for (const auto& s : ab_minimal_separators(g, a, b).sets) all.insert(s);
        }
    SeparatorFamily fam;
    fam.source = SeparatorFamily::Source::MinimalFamily;
    fam.sets = minimize_family(std::vector<Bitset>(all.begin(), all.end()));
    return fam;
}

std::vector<int> close_components(const Graph& g, const Bitset& s) {
    auto comps = components(g, s);
    if (comps.size() < 2) throw NotSeparatorError("set does not disconnect the graph");
    std::vector<int> out;
    for (int c = 0; c < int(comps.size()); ++c) {
        bool close = true;
        s.for_each([&](int v) {
            if (close && !(g.neighbors(v) & comps[c]).any()) close = false;
        });
        if (close) out.push_back(c);
    }
    return out;
}

bool check_complete_bipartite_separator(const Graph& g, const Bitset& s) {
    auto bp = bipartition(g);
    if (!std::holds_alternative<Bipartition>(bp)) return false;
    const auto& sides = std::get<Bipartition>(bp);
    Bitset sa = s & sides.side_a;
    Bitset sb = s & sides.side_b;
    bool ok = true;
    sa.for_each([&](int u) {
        if (!ok) return;
        if (!sb.subset_of(g.neighbors(u))) ok = false;
    });
    return ok;
}

namespace {

/// One (c+1)-subset check of the characterization; edges picked by index.
bool conformality_holds(const std::vector<Bitset>& edges, int n, int c) {
    const int m = int(edges.size());
    if (m <= c) return true;  // fewer than c+1 distinct edges: vacuous
    std::vector<int> pick(c + 1);
    // Iterative odometer over ascending index combinations.
    for (int i = 0; i <= c; ++i) pick[i] = i;
    std::vector<Bitset> pre(c + 2, Bitset::full(n)), suf(c + 2, Bitset::full(n));
    while (true) {
        // T = union over i of the intersection of all picked edges but i.
        // Build via prefix/suffix intersections.
        pre.assign(c + 2, Bitset::full(n));
        suf.assign(c + 2, Bitset::full(n));
        for (int i = 0; i <= c; ++i) pre[i + 1] = pre[i] & edges[pick[i]];
        for (int i = c; i >= 0; --i) suf[i] = suf[i + 1] & edges[pick[i]];
        Bitset t(n);
        for (int i = 0; i <= c; ++i) t |= pre[i] & suf[i + 1];
        bool covered = false;
        for (const auto& e : edges)
            if (t.subset_of(e)) {
                covered = true;
                break;
            }
        if (!covered) return false;
        // next combination
        int i = c;
        while (i >= 0 && pick[i] == m - (c + 1) + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j <= c; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}  // namespace

ConformalityResult conformality(const Hypergraph& h, int c_max) {
    for (int c = 1; c <= c_max; ++c)
        if (conformality_holds(h.edges(), h.n(), c)) return {false, c};
    return {true, 0};
}

}  // namespace domenum
