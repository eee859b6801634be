#pragma once

#include <vector>

#include "domenum/dualize.hpp"
#include "domenum/graph.hpp"

namespace domenum {

/// Minimal connected dominating sets of a connected graph as the minimal
/// transversals of its minimal-separator hypergraph. For chordal bipartite
/// inputs the separator family is polynomial and of bounded conformality;
/// the routine works on any connected graph without runtime promises.
/// Throws DisconnectedError.
std::vector<Bitset> enumerate_mcds(const Graph& g, DualizeStats* stats = nullptr);

std::vector<std::vector<std::string>> enumerate_mcds_ids(const Graph& g,
                                                         DualizeStats* stats = nullptr);

}  // namespace domenum
