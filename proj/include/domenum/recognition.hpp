#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domenum/graph.hpp"

namespace domenum {

/// Witness for a failed weak-simplicial test: either an adjacent pair inside
/// N(v) or a pair with incomparable neighborhoods.
struct WsViolation {
    int x = -1;
    int y = -1;
    bool adjacent = false;
};

/// v is weak-simplicial in g restricted to `alive` when N(v) is independent
/// and the neighborhoods of N(v) are pairwise comparable.
bool is_weak_simplicial(const Graph& g, int v, const Bitset& alive,
                        WsViolation* witness = nullptr);
bool is_weak_simplicial(const Graph& g, const std::string& id, WsViolation* witness = nullptr);

/// Check that order[i] is weak-simplicial in g[{order[0..i]}] for every i.
bool verify_elimination_ordering(const Graph& g, const std::vector<int>& order);

/// Greedy weak-simplicial elimination ordering (peel the lexicographically
/// smallest weak-simplicial vertex, ordering read back to front), re-verified
/// by definition before return. Empty result means not chordal bipartite.
std::optional<std::vector<int>> weak_simplicial_ordering(const Graph& g);

bool is_chordal_bipartite(const Graph& g);

struct ChainOrders {
    std::vector<int> x_order;  // N(x_i) ascending by inclusion
    std::vector<int> y_order;  // N(y_i) descending by inclusion
};

struct NotChainWitness {
    int u = -1;
    int v = -1;
};

/// Orderings witnessing that the bipartite graph induced by (x, y) is a
/// bipartite chain, or an incomparable pair.
std::variant<ChainOrders, NotChainWitness> chain_orders(const Graph& g, const Bitset& x,
                                                        const Bitset& y);

}  // namespace domenum
