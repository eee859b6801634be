#pragma once

#include <map>
#include <string>
#include <vector>

#include "domenum/extensions.hpp"
#include "domenum/graph.hpp"
#include "domenum/hypergraph.hpp"

namespace domenum {

/// Multicolored-independent-set instance: a graph plus a partition into
/// independent color classes.
struct MisInstance {
    Graph g;
    std::vector<Bitset> classes;
};

/// The bipartite graph built from a MIS instance, with the designated
/// partial solution and vertex ordering (gadget names sorted, then alpha and
/// beta last).
struct MisReduction {
    MisInstance instance;
    Graph h;
    std::vector<int> ordering;                // indices into h
    Bitset t_star;                            // over h
    std::map<std::string, std::string> roles; // vertex name -> gadget role
};

/// Gadget wiring: per class a c vertex joined to its class and to the x4 of
/// a four-path; per edge a subdivided claw; per vertex a pendant four-path;
/// alpha adjacent to every c vertex, beta pendant on alpha. Throws
/// InvalidPartitionError.
MisReduction build_mis_reduction(const MisInstance& inst);

/// All multicolored independent sets of the instance (one vertex per class,
/// pairwise non-adjacent), as vertex sets of inst.g.
std::vector<Bitset> multicolored_independent_sets(const MisInstance& inst);

struct MisChildrenReport {
    bool t_star_ok = false;        // t_star in Tr(H_{n-2})
    std::size_t children = 0;
    std::size_t expected = 0;      // #multicolored IS + 1
    bool bodies_match = false;     // children == {alpha-child} + IS children
    std::vector<Bitset> extra;     // children beyond the expected family
    std::vector<Bitset> missing;   // expected children not produced
};

/// Runs the engine with the brute extension oracle at the (n-2)-prefix and
/// compares the children against the multicolored-IS family.
MisChildrenReport verify_mis_children(const MisReduction& red, Mode mode);

/// Incidence-graph reduction: hypergraph vertices and edges become the two
/// sides, plus an apex vstar adjacent to all vertex-side vertices and a
/// pendant vprime. Throws EmptyEdgeError, NotSpernerError,
/// UncoveredVertexError.
struct TransReduction {
    Hypergraph h;
    Graph g;
    int v_prime = -1;
    int v_star = -1;
    std::vector<int> vertex_of;  // h vertex index -> g index
    std::vector<int> edge_of;    // h edge index -> g index
};

TransReduction build_transversal_reduction(const Hypergraph& h);

struct SeparatorStructureReport {
    bool matches = false;
    std::vector<Bitset> found;     // brute minimal separators of g
    std::vector<Bitset> expected;  // {N(e_j)} + {{vstar}}
};

/// Brute minimal separators of the reduction graph against the predicted
/// family.
SeparatorStructureReport verify_separator_structure(const TransReduction& red);

/// Maps a minimal connected dominating set of the reduction graph to the
/// corresponding minimal transversal of h. Throws MissingVStarError.
std::vector<std::string> mcds_to_transversal(const TransReduction& red,
                                             const std::vector<std::string>& t_g);

}  // namespace domenum
