#include "domenum/extensions.hpp"

#include <algorithm>
#include <unordered_set>

#include "domenum/errors.hpp"

namespace domenum {

namespace {

/// Insert-once candidate list; first insertion order is kept so the oracle
/// output order is deterministic.
struct CandidatePool {
    std::vector<Bitset> candidates;
    std::unordered_set<Bitset, BitsetHash> seen;

    void add(const Bitset& cand) {
        if (seen.insert(cand).second) candidates.push_back(cand);
    }
};

ExtensionResult validate_pool(const CandidatePool& pool, const DeltaFamily& d) {
    ExtensionResult res;
    res.pool = pool.candidates.size();
    for (const auto& cand : pool.candidates)
        if (is_minimal_transversal(d.edges, cand)) res.extensions.push_back(cand);
    return res;
}

}  // namespace

ChainInstance build_chain_instance(const Graph& g, const OrderedHypergraph& oh,
                                   const Bitset& t_star, int i, Mode mode,
                                   const DeltaFamily& d) {
    (void)t_star;
    const int n = g.n();
    ChainInstance ci;
    ci.v_next = d.v_next;
    ci.blue = Bitset(n);
    ci.red = Bitset(n);
    ci.prefix = oh.prefix_mask(i + 1);
    if (d.edges.empty()) return ci;

    std::unordered_set<Bitset, BitsetHash> delta_edges(d.edges.begin(), d.edges.end());

    // Blue: neighbors of v_next whose own (mode) neighborhood is a delta
    // edge; red: everything else lying in some delta edge.
    g.neighbors(ci.v_next).for_each([&](int u) {
        Bitset nb = mode == Mode::Closed ? g.closed_neighbors(u) : g.neighbors(u);
        if (delta_edges.count(nb)) ci.blue.set(u);
    });
    Bitset support(n);
    for (const auto& e : d.edges) support |= e;
    ci.red = support - ci.blue;

    ci.second_nbhd = g.second_neighborhood(ci.v_next, ci.prefix);

    // Chain verification on the instance inside G_i.
    Bitset prefix_i = oh.prefix_mask(i);
    Bitset verts = (ci.blue | ci.red) & prefix_i;
    verts.reset(ci.v_next);
    ci.x_side = verts & g.neighbors(ci.v_next);
    ci.y_side = verts - ci.x_side;
    auto chain = chain_orders(g, ci.x_side, ci.y_side);
    if (auto* bad = std::get_if<NotChainWitness>(&chain))
        throw NotChainError("chain verification failed between " + g.id_of(bad->u) + " and " +
                            g.id_of(bad->v) + " (invalid ordering?)");
    ci.orders = std::get<ChainOrders>(chain);
    return ci;
}

ExtensionResult mds_extensions(const Graph& g, const ChainInstance& ci, const DeltaFamily& d) {
    if (d.edges.empty()) throw EmptyDeltaError();
    const int n = g.n();
    CandidatePool pool;

    // Shape 1: {v_next}.
    pool.add(Bitset::of(n, {ci.v_next}));
    // Shape 2: all of blue.
    if (ci.blue.any()) pool.add(ci.blue);
    // Shape 3: red sets of size <= 2. A pair must split between N(v_next)
    // and the distance-2 part; two reds on one side cannot both keep a
    // private edge.
    Bitset red_near = ci.red & g.neighbors(ci.v_next);
    Bitset red_far = ci.red & ci.second_nbhd;
    ci.red.for_each([&](int r) { pool.add(Bitset::of(n, {r})); });
    red_near.for_each([&](int a) {
        red_far.for_each([&](int b) { pool.add(Bitset::of(n, {a, b})); });
    });
    // Shape 4: {r} union (B minus N(r)) for distance-2 reds.
    red_far.for_each([&](int r) {
        Bitset cand = ci.blue - g.neighbors(r);
        cand.set(r);
        pool.add(cand);
    });
    // Shape 4 corner: when every blue sees r and N[v_next] is itself a delta
    // edge, one blue joins r with N[v_next] as its private edge. Candidates
    // are generated unconditionally; validation rejects them elsewhere.
    red_far.for_each([&](int r) {
        (ci.blue & g.neighbors(r)).for_each([&](int b) { pool.add(Bitset::of(n, {r, b})); });
    });

    auto res = validate_pool(pool, d);
    sort_family(res.extensions);
    return res;
}

ExtensionResult tds_extensions(const Graph& g, const ChainInstance& ci, const DeltaFamily& d) {
    if (d.edges.empty()) throw EmptyDeltaError();
    const int n = g.n();
    CandidatePool pool;
    Bitset base = ci.second_nbhd | (g.neighbors(ci.v_next) & ci.prefix);
    base.set(ci.v_next);
    auto verts = base.indices();
    for (std::size_t a = 0; a < verts.size(); ++a) {
        pool.add(Bitset::of(n, {verts[a]}));
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            pool.add(Bitset::of(n, {verts[a], verts[b]}));
    }
    auto res = validate_pool(pool, d);
    sort_family(res.extensions);
    return res;
}

int classify_mds_extension(const ChainInstance& ci, const Bitset& z) {
    if (z == Bitset::of(z.universe(), {ci.v_next})) return 1;
    Bitset red = ci.red;
    red.reset(ci.v_next);
    bool meets_blue = z.intersects(ci.blue);
    bool meets_red = z.intersects(red);
    if (meets_blue && !meets_red) return 2;
    if (!meets_blue && meets_red) return 3;
    if (meets_blue && meets_red) return 4;
    return 0;  // not one of the four shapes
}

ExtensionOracle make_domination_oracle(const Graph& g, Mode mode) {
    return [g, mode](const OrderedHypergraph& oh, const Bitset& t_star, int i,
                     const DeltaFamily& d) {
        ChainInstance ci = build_chain_instance(g, oh, t_star, i, mode, d);
        return mode == Mode::Closed ? mds_extensions(g, ci, d) : tds_extensions(g, ci, d);
    };
}

OrderedHypergraph neighborhood_ordered_hypergraph(const Graph& g, Mode mode,
                                                  std::vector<int> ordering) {
    if (mode == Mode::Closed)
        return OrderedHypergraph(closed_neighborhood_hypergraph(g), std::move(ordering));

    Hypergraph h = open_neighborhood_hypergraph(g);
    // Tie each edge to the entry rank of the closed neighborhood of (one of)
    // its centers, so the edge for N(u) enters once u itself is in the
    // prefix. All delta edges at a step then have in-prefix centers, which
    // is what keeps the extension instance a bipartite chain.
    std::vector<int> rank(g.n());
    for (int r = 1; r <= g.n(); ++r) rank[ordering[r - 1]] = r;
    auto closed_entry = [&](int u) {
        int e = rank[u];
        g.neighbors(u).for_each([&](int w) { e = std::max(e, rank[w]); });
        return e;
    };
    std::vector<int> entry(h.edge_count(), 0);
    for (int e = 0; e < h.edge_count(); ++e) {
        int best = g.n() + 1;
        for (int u = 0; u < g.n(); ++u)
            if (g.neighbors(u) == h.edge(e)) best = std::min(best, closed_entry(u));
        entry[e] = best;
    }
    return OrderedHypergraph(std::move(h), std::move(ordering), std::move(entry));
}

OrderedHypergraph domination_hypergraph(const Graph& g, Mode mode) {
    auto ordering = weak_simplicial_ordering(g);
    if (!ordering) throw NotChordalBipartiteError();
    return neighborhood_ordered_hypergraph(g, mode, std::move(*ordering));
}

DominationEnumerator::DominationEnumerator(const Graph& g, Mode mode, NodeHook hook) : g_(g) {
    OrderedHypergraph oh = domination_hypergraph(g_, mode);
    enumerator_ = std::make_unique<TransversalEnumerator>(
        std::move(oh), make_domination_oracle(g_, mode), std::move(hook));
}

std::optional<Bitset> DominationEnumerator::next() { return enumerator_->next(); }

std::optional<std::vector<std::string>> DominationEnumerator::next_ids() {
    auto t = next();
    if (!t) return std::nullopt;
    return g_.ids_of(*t);
}

std::vector<Bitset> enumerate_mds(const Graph& g, EngineStats* stats) {
    DominationEnumerator en(g, Mode::Closed);
    std::vector<Bitset> out;
    while (auto t = en.next()) out.push_back(*t);
    if (stats) *stats = en.stats();
    return out;
}

std::vector<Bitset> enumerate_mtds(const Graph& g, EngineStats* stats) {
    DominationEnumerator en(g, Mode::Open);
    std::vector<Bitset> out;
    while (auto t = en.next()) out.push_back(*t);
    if (stats) *stats = en.stats();
    return out;
}

}  // namespace domenum
