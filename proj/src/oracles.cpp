#include "domenum/oracles.hpp"

#include <algorithm>
#include <cstdlib>

#include "domenum/errors.hpp"

namespace domenum {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap) throw TooLargeError(std::string(what) + ": " + std::to_string(n) +
                                     " vertices exceeds cap " + std::to_string(cap));
}

Bitset from_mask(std::uint32_t mask, int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) b.set(i);
    return b;
}

/// Keep the inclusion-minimal members of a family listed in ascending
/// cardinality order.
std::vector<Bitset> keep_minimal_sorted(std::vector<Bitset> family) {
    std::vector<Bitset> kept;
    for (const auto& s : family) {
        bool has_smaller = false;
        for (const auto& k : kept)
            if (k.subset_of(s)) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) kept.push_back(s);
    }
    sort_family(kept);
    return kept;
}

bool connected_within(const Graph& g, const Bitset& s) {
    int start = s.first();
    if (start < 0) return false;
    Bitset seen(g.n());
    seen.set(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        (g.neighbors(u) & s).for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        });
    }
    return seen == s;
}

}  // namespace

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    if (const char* env = std::getenv("DOMENUM_ORACLE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) {
            caps.domination = v;
            caps.connected_domination = v;
            caps.transversals = v;
            caps.separators = v;
            caps.conformality = v;
            caps.cycles = v;
        }
    }
    return caps;
}

std::vector<Bitset> brute_mds(const Graph& g, const OracleCaps& caps) {
    const int n = g.n();
    check_cap(n, caps.domination, "brute_mds");
    std::vector<Bitset> closed;
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
    Bitset all = Bitset::full(n);
    auto dominates = [&](const Bitset& d) {
        Bitset cov(n);
        d.for_each([&](int v) { cov |= closed[v]; });
        return cov == all;
    };
    std::vector<Bitset> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        Bitset d = from_mask(mask, n);
        if (!dominates(d)) continue;
        bool minimal = true;
        d.for_each([&](int v) {
            if (!minimal) return;
            Bitset smaller = d;
            smaller.reset(v);
            if (dominates(smaller)) minimal = false;
        });
        if (minimal) out.push_back(d);
    }
    sort_family(out);
    return out;
}

std::vector<Bitset> brute_mtds(const Graph& g, const OracleCaps& caps) {
    const int n = g.n();
    check_cap(n, caps.domination, "brute_mtds");
    Bitset all = Bitset::full(n);
    auto dominates = [&](const Bitset& d) {
        Bitset cov(n);
        d.for_each([&](int v) { cov |= g.neighbors(v); });
        return cov == all;
    };
    std::vector<Bitset> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        Bitset d = from_mask(mask, n);
        if (!dominates(d)) continue;
        bool minimal = true;
        d.for_each([&](int v) {
            if (!minimal) return;
            Bitset smaller = d;
            smaller.reset(v);
            if (dominates(smaller)) minimal = false;
        });
        if (minimal) out.push_back(d);
    }
    sort_family(out);
    return out;
}

std::vector<Bitset> brute_mcds(const Graph& g, const OracleCaps& caps) {
    const int n = g.n();
    check_cap(n, caps.connected_domination, "brute_mcds");
    std::vector<Bitset> closed;
    for (int v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
    Bitset all = Bitset::full(n);
    auto is_cds = [&](const Bitset& d) {
        if (d.none()) return false;
        Bitset cov(n);
        d.for_each([&](int v) { cov |= closed[v]; });
        return cov == all && connected_within(g, d);
    };
    std::vector<std::pair<int, Bitset>> cds;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        Bitset d = from_mask(mask, n);
        if (is_cds(d)) cds.emplace_back(d.count(), d);
    }
    std::sort(cds.begin(), cds.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.lex_less(b.second);
    });
    std::vector<Bitset> ordered;
    ordered.reserve(cds.size());
    for (auto& [c, d] : cds) ordered.push_back(std::move(d));
    return keep_minimal_sorted(std::move(ordered));
}

std::vector<Bitset> brute_transversals_edges(const std::vector<Bitset>& edges, int n,
                                             const OracleCaps& caps) {
    check_cap(n, caps.transversals, "brute_transversals");
    std::vector<Bitset> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        Bitset t = from_mask(mask, n);
        if (is_minimal_transversal(edges, t)) out.push_back(t);
    }
    sort_family(out);
    return out;
}

std::vector<Bitset> brute_transversals(const Hypergraph& h, const OracleCaps& caps) {
    return brute_transversals_edges(h.edges(), h.n(), caps);
}

std::vector<Bitset> brute_separators(const Graph& g, bool minimal_only, const OracleCaps& caps) {
    const int n = g.n();
    check_cap(n, caps.separators, "brute_separators");
    std::vector<std::pair<int, Bitset>> seps;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        Bitset s = from_mask(mask, n);
        if (components(g, s).size() >= 2) seps.emplace_back(s.count(), s);
    }
    std::sort(seps.begin(), seps.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.lex_less(b.second);
    });
    std::vector<Bitset> ordered;
    ordered.reserve(seps.size());
    for (auto& [c, s] : seps) ordered.push_back(std::move(s));
    if (!minimal_only) {
        sort_family(ordered);
        return ordered;
    }
    return keep_minimal_sorted(std::move(ordered));
}

ConformalityResult brute_conformality(const Hypergraph& h, int c_max, const OracleCaps& caps) {
    const int n = h.n();
    check_cap(n, caps.conformality, "brute_conformality");
    const auto& edges = h.edges();
    const std::uint32_t full = std::uint32_t(1) << n;
    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : edges) {
        std::uint32_t m = 0;
        e.for_each([&](int i) { m |= std::uint32_t(1) << i; });
        edge_masks.push_back(m);
    }
    // covered[X]: X is a subset of some edge.
    std::vector<char> covered(full, 0);
    for (std::uint32_t x = 0; x < full; ++x)
        for (auto em : edge_masks)
            if ((x & ~em) == 0) {
                covered[x] = 1;
                break;
            }
    // u[X]: size of the smallest uncovered subset of X (only meaningful for
    // uncovered X; coverage is downward closed).
    std::vector<int> u(full, 0);
    int worst = 0;
    for (std::uint32_t x = 0; x < full; ++x) {
        if (covered[x]) continue;
        int best = __builtin_popcount(x);
        for (int i = 0; i < n; ++i) {
            if (!((x >> i) & 1)) continue;
            std::uint32_t y = x & ~(std::uint32_t(1) << i);
            if (!covered[y]) best = std::min(best, u[y]);
        }
        u[x] = best;
        worst = std::max(worst, best);
    }
    int c = std::max(worst, 1);
    if (c > c_max) return {true, 0};
    return {false, c};
}

std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len,
                                                        const OracleCaps& caps) {
    const int n = g.n();
    check_cap(n, caps.cycles, "find_long_induced_cycle");
    // DFS over induced paths anchored at their smallest vertex s. A path may
    // only close back to s, so any extension adjacent to an inner vertex is
    // pruned.
    std::vector<int> path;
    std::optional<std::vector<int>> found;

    auto search = [&](auto&& self, int s, Bitset& onpath) -> bool {
        int last = path.back();
        if (int(path.size()) >= min_len && g.adjacent(last, s)) {
            found = path;
            return true;
        }
        Bitset cand = g.neighbors(last);
        bool ok = false;
        cand.for_each([&](int w) {
            if (ok || w <= s || onpath.test(w)) return;
            // w must see no inner path vertex, and may touch s only as the
            // path's second vertex or when actually closing a long cycle.
            Bitset inner = onpath;
            inner.reset(last);
            inner.reset(s);
            if ((g.neighbors(w) & inner).any()) return;
            if (path.size() >= 2 && g.adjacent(w, s) && int(path.size()) + 1 < min_len) return;
            path.push_back(w);
            onpath.set(w);
            if (self(self, s, onpath)) ok = true;
            onpath.reset(w);
            path.pop_back();
        });
        return ok;
    };

    for (int s = 0; s < n; ++s) {
        Bitset onpath(n);
        path.assign(1, s);
        onpath.set(s);
        if (search(search, s, onpath)) return found;
    }
    return std::nullopt;
}

bool is_chordal_bipartite_by_definition(const Graph& g, const OracleCaps& caps) {
    if (!is_bipartite(g)) return false;
    return !find_long_induced_cycle(g, 6, caps).has_value();
}

}  // namespace domenum
