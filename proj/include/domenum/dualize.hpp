#pragma once

#include <cstdint>
#include <vector>

#include "domenum/hypergraph.hpp"

namespace domenum {

struct DualizeStats {
    std::uint64_t work = 0;                     // product + minimization steps
    std::vector<std::uint64_t> emission_work;   // cumulative work at each emission
};

/// Tr(edges) by Berge multiplication: fold edges one at a time in ascending
/// size order, crossing the partial transversal family with the next edge
/// and Sperner-minimizing after every fold. Exact for any input; intended
/// for desk-scale families.
std::vector<Bitset> berge_minimal_transversals(std::vector<Bitset> edges, int n,
                                               DualizeStats* stats = nullptr);

/// Streaming contract around Berge multiplication: emits Tr(h) exactly and
/// records a cumulative work counter per emitted solution.
std::vector<Bitset> incremental_dualize(const Hypergraph& h, DualizeStats* stats = nullptr);

}  // namespace domenum
