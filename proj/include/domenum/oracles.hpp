#pragma once

#include <optional>
#include <vector>

#include "domenum/graph.hpp"
#include "domenum/hypergraph.hpp"

namespace domenum {

/// Size caps for the exhaustive reference sweeps. Exceeding a cap throws
/// TooLargeError, never truncates. DOMENUM_ORACLE_CAP overrides all caps.
struct OracleCaps {
    int domination = 20;
    int connected_domination = 14;
    int transversals = 22;
    int separators = 14;
    int conformality = 15;
    int cycles = 14;

    static OracleCaps from_env();
};

/// All minimal dominating sets, by subset sweep with single-removal
/// minimality (valid: domination is monotone).
std::vector<Bitset> brute_mds(const Graph& g, const OracleCaps& caps = OracleCaps::from_env());

/// All minimal total dominating sets. Returns the empty family when no
/// total dominating set exists (isolated vertex present).
std::vector<Bitset> brute_mtds(const Graph& g, const OracleCaps& caps = OracleCaps::from_env());

/// All minimal connected dominating sets. Minimality is full proper-subset
/// minimality (connectivity is not monotone, single removal is not enough).
std::vector<Bitset> brute_mcds(const Graph& g, const OracleCaps& caps = OracleCaps::from_env());

/// Tr(h) by subset sweep plus the private-edge certificate.
std::vector<Bitset> brute_transversals(const Hypergraph& h,
                                       const OracleCaps& caps = OracleCaps::from_env());
std::vector<Bitset> brute_transversals_edges(const std::vector<Bitset>& edges, int n,
                                             const OracleCaps& caps = OracleCaps::from_env());

/// All (inclusion-minimal, when minimal_only) separators.
std::vector<Bitset> brute_separators(const Graph& g, bool minimal_only,
                                     const OracleCaps& caps = OracleCaps::from_env());

struct ConformalityResult {
    bool above_max = false;
    int c = 0;
    bool operator==(const ConformalityResult&) const = default;
};

/// Smallest c <= c_max satisfying the conformality definition, by literal
/// sweep over all vertex subsets.
ConformalityResult brute_conformality(const Hypergraph& h, int c_max,
                                      const OracleCaps& caps = OracleCaps::from_env());

/// An induced cycle of length >= min_len, if one exists.
std::optional<std::vector<int>> find_long_induced_cycle(const Graph& g, int min_len,
                                                        const OracleCaps& caps = OracleCaps::from_env());

/// Definition-level chordal-bipartite test: bipartite and no induced cycle
/// of length six or more.
bool is_chordal_bipartite_by_definition(const Graph& g,
                                        const OracleCaps& caps = OracleCaps::from_env());

}  // namespace domenum
