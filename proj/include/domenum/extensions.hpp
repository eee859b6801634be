#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domenum/graph.hpp"
#include "domenum/recognition.hpp"
#include "domenum/seq_engine.hpp"

namespace domenum {

enum class Mode { Closed, Open };

/// The colored bipartite-chain instance around v_{i+1}. Blue vertices are
/// neighbors of v_{i+1} whose (mode) neighborhood is an edge of the delta
/// family; red vertices are the remaining vertices lying in some delta edge.
struct ChainInstance {
    int v_next = -1;
    Bitset blue;
    Bitset red;
    Bitset prefix;               // V_{i+1} mask
    Bitset x_side;               // instance vertices adjacent to v_next
    Bitset y_side;               // remaining instance vertices
    Bitset second_nbhd;          // N2(v_next) within the (i+1)-prefix
    ChainOrders orders;
};

/// Builds the chain instance for a node of the enumeration tree and verifies
/// the bipartite-chain property on G_i[instance]; failure signals an invalid
/// ordering and raises NotChainError.
ChainInstance build_chain_instance(const Graph& g, const OrderedHypergraph& oh,
                                   const Bitset& t_star, int i, Mode mode,
                                   const DeltaFamily& d);

/// Exactly Tr(delta) for closed-neighborhood deltas on chordal bipartite
/// graphs: candidate pool from the four extension shapes ({v_next}; B; red
/// sets of size <= 2; {r} union (B minus N(r))), each validated as a minimal
/// transversal. Throws EmptyDeltaError when delta is empty.
ExtensionResult mds_extensions(const Graph& g, const ChainInstance& ci, const DeltaFamily& d);

/// Exactly Tr(delta) for open-neighborhood deltas: all subsets of size <= 2
/// of {v_next} plus N(v_next) plus N2(v_next) within the prefix, validated.
ExtensionResult tds_extensions(const Graph& g, const ChainInstance& ci, const DeltaFamily& d);

/// Which of the four characterization shapes an emitted extension matches:
/// 1 = {v_next}, 2 = subset of blue, 3 = subset of red, 4 = mixed.
int classify_mds_extension(const ChainInstance& ci, const Bitset& z);

/// Extension oracle plugging the chain-instance construction into the
/// engine.
ExtensionOracle make_domination_oracle(const Graph& g, Mode mode);

struct DominationRun {
    OrderedHypergraph oh;
    std::unique_ptr<TransversalEnumerator> enumerator;
};

/// Neighborhood hypergraph of g over an arbitrary vertex ordering. In open
/// mode every edge N(u) is tied to the entry rank of N[u], so all delta
/// edges at a step have their center in the prefix.
OrderedHypergraph neighborhood_ordered_hypergraph(const Graph& g, Mode mode,
                                                  std::vector<int> ordering);

/// Same, over the weak-simplicial elimination ordering. Throws
/// NotChordalBipartiteError (and, in open mode, IsolatedVertexError).
OrderedHypergraph domination_hypergraph(const Graph& g, Mode mode);

/// Streaming enumeration of minimal (total) dominating sets of a chordal
/// bipartite graph.
class DominationEnumerator {
public:
    DominationEnumerator(const Graph& g, Mode mode, NodeHook hook = {});

    std::optional<Bitset> next();
    std::optional<std::vector<std::string>> next_ids();
    const EngineStats& stats() const { return enumerator_->stats(); }
    const OrderedHypergraph& ordered() const { return enumerator_->ordered(); }
    const Graph& graph() const { return g_; }

private:
    Graph g_;
    std::unique_ptr<TransversalEnumerator> enumerator_;
};

/// Whole-family conveniences used by tests.
std::vector<Bitset> enumerate_mds(const Graph& g, EngineStats* stats = nullptr);
std::vector<Bitset> enumerate_mtds(const Graph& g, EngineStats* stats = nullptr);

}  // namespace domenum
