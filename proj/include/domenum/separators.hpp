#pragma once

#include <string>
#include <vector>

#include "domenum/graph.hpp"
#include "domenum/hypergraph.hpp"
#include "domenum/oracles.hpp"

namespace domenum {

struct SeparatorFamily {
    enum class Source { AbFamily, MinimalFamily };
    std::vector<Bitset> sets;
    Source source = Source::AbFamily;
};

/// All inclusion-minimal a-b separators, by close-separator expansion:
/// seed with N(C_b) in G - N[a], then push each known separator past each of
/// its vertices.
SeparatorFamily ab_minimal_separators(const Graph& g, int a, int b);
SeparatorFamily ab_minimal_separators(const Graph& g, const std::string& a, const std::string& b);

/// S(G): union of the a-b families over all non-adjacent pairs, filtered to
/// inclusion-minimal members.
SeparatorFamily minimal_separators(const Graph& g);

/// Components of G - s in which every vertex of s has a neighbor; indices
/// into components(g, s). Throws NotSeparatorError if s does not separate.
std::vector<int> close_components(const Graph& g, const Bitset& s);

/// Every pair across the two sides of s (under g's bipartition) adjacent.
bool check_complete_bipartite_separator(const Graph& g, const Bitset& s);

/// Smallest c <= c_max for which the (c+1)-edge characterization holds: for
/// every c+1 edges, the set of vertices lying in at least c of them is
/// inside some edge.
ConformalityResult conformality(const Hypergraph& h, int c_max);

}  // namespace domenum
