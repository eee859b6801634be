#pragma once

#include <cstdint>

#include "domenum/graph.hpp"

namespace domenum {

/// Random chordal bipartite graph: vertices are added one at a time, each
/// new vertex picking an independent neighbor set with inclusion-chain
/// neighborhoods among the earlier vertices (so the insertion order is a
/// weak-simplicial elimination ordering by construction). Target expected
/// degree is density*(i-1), realized by rejection sampling with a retry
/// budget that falls back to sparser sets. Deterministic for a fixed seed;
/// the result is certified by recognition before return.
Graph generate_chordal_bipartite(int n, double density, std::uint64_t seed);

}  // namespace domenum
