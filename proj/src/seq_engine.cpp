#include "domenum/seq_engine.hpp"

#include <algorithm>

#include "domenum/errors.hpp"

namespace domenum {

OrderedHypergraph::OrderedHypergraph(Hypergraph h, std::vector<int> ordering,
                                     std::vector<int> entry_override)
    : h_(std::move(h)), ordering_(std::move(ordering)) {
    const int n = int(ordering_.size());
    if (n != h_.n()) throw BadIndexError("ordering size does not match vertex count");
    rank_.assign(n, 0);
    for (int r = 1; r <= n; ++r) rank_[ordering_[r - 1]] = r;
    buckets_.assign(n + 1, {});
    for (int e = 0; e < h_.edge_count(); ++e) {
        int entry = 0;
        h_.edge(e).for_each([&](int v) { entry = std::max(entry, rank_[v]); });
        if (!entry_override.empty()) {
            if (entry_override[e] < entry)
                throw BadIndexError("entry override precedes an edge member");
            entry = entry_override[e];
        }
        buckets_[entry].push_back(e);
    }
}

Bitset OrderedHypergraph::prefix_mask(int i) const {
    Bitset b(n());
    for (int r = 1; r <= i; ++r) b.set(ordering_[r - 1]);
    return b;
}

std::vector<Bitset> OrderedHypergraph::edges_up_to(int i) const {
    std::vector<Bitset> out;
    for (int r = 0; r <= i; ++r)
        for (int e : buckets_[r]) out.push_back(h_.edge(e));
    return out;
}

Hypergraph prefix_hypergraph(const Hypergraph& h, const std::vector<int>& ordering, int i) {
    const int n = h.n();
    if (i < 0 || i > n) throw BadIndexError("prefix index out of range: " + std::to_string(i));
    Bitset mask(n);
    for (int r = 0; r < i; ++r) mask.set(ordering[r]);
    std::vector<std::string> ids;
    mask.for_each([&](int v) { ids.push_back(h.id_of(v)); });
    std::vector<std::vector<std::string>> edges;
    for (const auto& e : h.edges())
        if (e.subset_of(mask)) {
            std::vector<std::string> edge_ids;
            e.for_each([&](int v) { edge_ids.push_back(h.id_of(v)); });
            edges.push_back(std::move(edge_ids));
        }
    return Hypergraph(std::move(ids), edges);
}

std::vector<int> private_edges(const std::vector<Bitset>& edges, const Bitset& s, int v) {
    if (!s.test(v)) throw NotMemberError("vertex not a member of the set");
    std::vector<int> out;
    for (int e = 0; e < int(edges.size()); ++e) {
        if (!edges[e].test(v)) continue;
        Bitset rest = edges[e] & s;
        rest.reset(v);
        if (rest.none()) out.push_back(e);
    }
    return out;
}

std::vector<int> private_edges(const Hypergraph& h_i, const Bitset& s, int v) {
    return private_edges(h_i.edges(), s, v);
}

namespace {

bool has_private(const std::vector<Bitset>& edges, const Bitset& s, int v) {
    for (const auto& e : edges) {
        if (!e.test(v)) continue;
        Bitset rest = e & s;
        rest.reset(v);
        if (rest.none()) return true;
    }
    return false;
}

/// Greedy removal pass; precondition (t minimal transversal of H_{i+1})
/// already checked by the caller.
Bitset parent_unchecked(const OrderedHypergraph& oh, Bitset t, int i_plus_1) {
    auto h_i = oh.edges_up_to(i_plus_1 - 1);
    bool removed = true;
    while (removed) {
        removed = false;
        // members in ascending rank; restart after every removal
        for (int r = 1; r <= oh.n() && !removed; ++r) {
            int v = oh.vertex_at(r);
            if (!t.test(v)) continue;
            if (!has_private(h_i, t, v)) {
                t.reset(v);
                removed = true;
            }
        }
    }
    return t;
}

}  // namespace

Bitset parent(const OrderedHypergraph& oh, const Bitset& t, int i_plus_1) {
    if (!is_minimal_transversal(oh.edges_up_to(i_plus_1), t))
        throw NotMinimalTransversalError("parent: input is not a minimal transversal");
    return parent_unchecked(oh, t, i_plus_1);
}

DeltaFamily delta(const OrderedHypergraph& oh, const Bitset& t_star, int i) {
    DeltaFamily d;
    d.v_next = i + 1 <= oh.n() ? oh.vertex_at(i + 1) : -1;
    for (int e : oh.entering(i + 1))
        if (!oh.hypergraph().edge(e).intersects(t_star)) d.edges.push_back(oh.hypergraph().edge(e));
    return d;
}

ExtensionResult brute_extension_oracle(const OrderedHypergraph& oh, const Bitset& t_star, int i,
                                       const DeltaFamily& d, int support_cap) {
    (void)t_star;
    (void)i;
    ExtensionResult res;
    if (d.edges.empty()) {
        res.extensions.push_back(Bitset(oh.hypergraph().n()));
        res.pool = 1;
        return res;
    }
    Bitset support(oh.hypergraph().n());
    for (const auto& e : d.edges) support |= e;
    auto sup = support.indices();
    if (int(sup.size()) > support_cap)
        throw SupportTooLargeError("delta support " + std::to_string(sup.size()) +
                                   " exceeds cap " + std::to_string(support_cap));
    // Exhaustive sweep over subsets of the support.
    const std::uint64_t lim = std::uint64_t(1) << sup.size();
    for (std::uint64_t mask = 0; mask < lim; ++mask) {
        Bitset cand(oh.hypergraph().n());
        for (std::size_t b = 0; b < sup.size(); ++b)
            if ((mask >> b) & 1) cand.set(sup[b]);
        if (is_minimal_transversal(d.edges, cand)) res.extensions.push_back(cand);
    }
    res.pool = lim;
    sort_family(res.extensions);
    return res;
}

ExtensionOracle make_brute_extension_oracle(int support_cap) {
    return [support_cap](const OrderedHypergraph& oh, const Bitset& t_star, int i,
                         const DeltaFamily& d) {
        return brute_extension_oracle(oh, t_star, i, d, support_cap);
    };
}

std::vector<Bitset> children(const OrderedHypergraph& oh, const Bitset& t_star, int i,
                             const ExtensionOracle& oracle, EngineStats* stats,
                             const NodeHook& hook) {
    DeltaFamily d = delta(oh, t_star, i);
    if (stats) ++stats->nodes;
    if (d.edges.empty()) {
        if (hook) hook(t_star, i, d, {});
        return {t_star};
    }
    ExtensionResult ext = oracle(oh, t_star, i, d);
    if (stats) {
        stats->candidates += ext.pool;
        stats->pool_max = std::max(stats->pool_max, ext.pool);
    }
    if (hook) hook(t_star, i, d, ext.extensions);
    auto h_next = oh.edges_up_to(i + 1);
    std::vector<Bitset> kids;
    for (const auto& x : ext.extensions) {
        Bitset t = t_star | x;
        if (!is_minimal_transversal(h_next, t)) continue;
        if (parent_unchecked(oh, t, i + 1) == t_star) kids.push_back(t);
    }
    if (stats && kids.empty()) ++stats->dead_ends;
    return kids;
}

TransversalEnumerator::TransversalEnumerator(OrderedHypergraph oh, ExtensionOracle oracle,
                                             NodeHook hook)
    : oh_(std::move(oh)), oracle_(std::move(oracle)), hook_(std::move(hook)) {
    // An empty hyperedge can never be hit: Tr(H) is empty.
    for (const auto& e : oh_.hypergraph().edges())
        if (e.none()) empty_edge_ = true;
}

std::optional<Bitset> TransversalEnumerator::next() {
    if (empty_edge_) return std::nullopt;
    const int n = oh_.n();
    if (!started_) {
        started_ = true;
        Bitset root(oh_.hypergraph().n());
        if (n == 0) {
            ++stats_.emissions;
            return root;
        }
        stack_.push_back({children(oh_, root, 0, oracle_, &stats_, hook_), 0});
    }
    while (!stack_.empty()) {
        Level& top = stack_.back();
        if (top.next >= top.kids.size()) {
            stack_.pop_back();
            continue;
        }
        Bitset t = top.kids[top.next++];
        int depth = int(stack_.size());  // t is a transversal of H_depth
        if (depth == n) {
            ++stats_.emissions;
            return t;
        }
        stack_.push_back({children(oh_, t, depth, oracle_, &stats_, hook_), 0});
    }
    return std::nullopt;
}

std::vector<Bitset> enumerate_transversals(const OrderedHypergraph& oh,
                                           const ExtensionOracle& oracle, EngineStats* stats) {
    TransversalEnumerator en(oh, oracle);
    std::vector<Bitset> out;
    while (auto t = en.next()) out.push_back(*t);
    if (stats) *stats = en.stats();
    return out;
}

}  // namespace domenum
