#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "domenum/hypergraph.hpp"

namespace domenum {

/// A minimal transversal of the i-th prefix hypergraph, i.e. one node of the
/// ordered-generation tree.
struct PartialSolution {
    Bitset t;
    int i = 0;
};

/// The family of prefix edges left unhit by the current partial solution;
/// all its edges enter at rank i+1.
struct DeltaFamily {
    std::vector<Bitset> edges;
    int v_next = -1;  // vertex at rank i+1
};

/// Hypergraph with a vertex ordering. Edges are bucketed by entry rank: the
/// default entry is the largest rank among an edge's members (the induced
/// prefix semantics), but callers may tie edges to later ranks, e.g. to make
/// an open neighborhood enter together with its center.
class OrderedHypergraph {
public:
    OrderedHypergraph(Hypergraph h, std::vector<int> ordering,
                      std::vector<int> entry_override = {});

    const Hypergraph& hypergraph() const { return h_; }
    int n() const { return int(ordering_.size()); }
    int vertex_at(int rank) const { return ordering_[rank - 1]; }  // ranks are 1-based
    int rank_of(int vertex) const { return rank_[vertex]; }
    const std::vector<int>& ordering() const { return ordering_; }

    /// Vertices with rank <= i.
    Bitset prefix_mask(int i) const;
    /// Edge indices entering exactly at rank i.
    const std::vector<int>& entering(int i) const { return buckets_[i]; }
    /// Edge sets of all edges with entry rank <= i.
    std::vector<Bitset> edges_up_to(int i) const;

private:
    Hypergraph h_;
    std::vector<int> ordering_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> buckets_;
};

/// Induced prefix hypergraph H_i = H[V_i]: vertex set are the first i
/// vertices of the ordering, edges those fully contained in them.
Hypergraph prefix_hypergraph(const Hypergraph& h, const std::vector<int>& ordering, int i);

/// Edges of `edges` meeting s exactly in {v}. Throws NotMemberError if v is
/// not in s.
std::vector<int> private_edges(const std::vector<Bitset>& edges, const Bitset& s, int v);
std::vector<int> private_edges(const Hypergraph& h_i, const Bitset& s, int v);

/// Parent of t with respect to rank i_plus_1: repeatedly remove the member
/// of smallest rank without a private edge in H_i. Throws
/// NotMinimalTransversalError if t is not a minimal transversal of H_{i+1}.
Bitset parent(const OrderedHypergraph& oh, const Bitset& t, int i_plus_1);

/// Unhit edges of H_{i+1} given t_star in Tr(H_i).
DeltaFamily delta(const OrderedHypergraph& oh, const Bitset& t_star, int i);

/// What an extension oracle returns: the minimal transversals of the delta
/// family plus the number of candidates it had to consider (pool size).
struct ExtensionResult {
    std::vector<Bitset> extensions;
    std::uint64_t pool = 0;
};

using ExtensionOracle =
    std::function<ExtensionResult(const OrderedHypergraph&, const Bitset& t_star, int i,
                                  const DeltaFamily&)>;

/// Exhaustive reference oracle over the delta support. Throws
/// SupportTooLargeError above `support_cap`.
ExtensionResult brute_extension_oracle(const OrderedHypergraph& oh, const Bitset& t_star, int i,
                                       const DeltaFamily& delta, int support_cap = 22);
ExtensionOracle make_brute_extension_oracle(int support_cap = 22);

struct EngineStats {
    std::uint64_t nodes = 0;             // children() invocations
    std::uint64_t candidates = 0;        // oracle pool sizes, summed
    std::uint64_t emissions = 0;
    std::uint64_t dead_ends = 0;         // nodes with no children
    std::uint64_t pool_max = 0;          // largest oracle pool at one node
    std::uint64_t work() const { return nodes + candidates; }
};

/// Observer invoked at every expanded node, after extension computation.
using NodeHook = std::function<void(const Bitset& t_star, int i, const DeltaFamily&,
                                    const std::vector<Bitset>& extensions)>;

/// Children of (t_star, i): {t_star} when delta is empty, otherwise the
/// oracle's extensions filtered by the parent relation.
std::vector<Bitset> children(const OrderedHypergraph& oh, const Bitset& t_star, int i,
                             const ExtensionOracle& oracle, EngineStats* stats = nullptr,
                             const NodeHook& hook = {});

/// DFS over the parent/children tree rooted at (empty set, 0), emitting the
/// minimal transversals of the full hypergraph. The traversal state lives on
/// an explicit stack of per-depth child lists; one enumerator owns one
/// stream.
class TransversalEnumerator {
public:
    TransversalEnumerator(OrderedHypergraph oh, ExtensionOracle oracle, NodeHook hook = {});

    std::optional<Bitset> next();
    const EngineStats& stats() const { return stats_; }
    const OrderedHypergraph& ordered() const { return oh_; }

private:
    struct Level {
        std::vector<Bitset> kids;
        std::size_t next = 0;
    };

    OrderedHypergraph oh_;
    ExtensionOracle oracle_;
    NodeHook hook_;
    EngineStats stats_;
    std::vector<Level> stack_;
    bool started_ = false;
    bool empty_edge_ = false;
};

/// Convenience: run the enumerator to completion.
std::vector<Bitset> enumerate_transversals(const OrderedHypergraph& oh,
                                           const ExtensionOracle& oracle,
                                           EngineStats* stats = nullptr);

}  // namespace domenum
