#pragma once

#include <string>
#include <vector>

#include "domenum/bitset.hpp"
#include "domenum/graph.hpp"

namespace domenum {

/// Vertex set plus a family of hyperedges over dense indices. Duplicate
/// edges are collapsed at construction (the count is kept for stats);
/// transversal families are insensitive to duplicates.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Vertex universe is the sorted union of `vertex_ids` and all ids
    /// appearing in `edges`.
    Hypergraph(std::vector<std::string> vertex_ids,
               const std::vector<std::vector<std::string>>& edges);
    /// Same universe/id table as an existing graph.
    Hypergraph(const Graph& g, std::vector<Bitset> edges);

    int n() const { return int(ids_.size()); }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_of(int i) const { return ids_[i]; }
    int index_of(const std::string& id) const;

    const std::vector<Bitset>& edges() const { return edges_; }
    const Bitset& edge(int e) const { return edges_[e]; }

    int duplicates_collapsed() const { return duplicates_collapsed_; }

    /// Union of all edges.
    Bitset support() const;
    /// Edges incident to vertex v.
    std::vector<int> incident(int v) const;

    std::vector<std::vector<std::string>> edges_as_ids() const;

    /// Replace the edge family, keeping the vertex universe.
    void replace_edges(std::vector<Bitset> edges) {
        edges_ = std::move(edges);
        collapse_duplicates();
    }

private:
    void collapse_duplicates();

    std::vector<std::string> ids_;
    std::vector<Bitset> edges_;
    int duplicates_collapsed_ = 0;
};

/// One edge N[v] per vertex.
Hypergraph closed_neighborhood_hypergraph(const Graph& g);

/// One edge N(v) per vertex; throws IsolatedVertexError if some vertex has
/// no neighbor (no total dominating set exists then).
Hypergraph open_neighborhood_hypergraph(const Graph& g);

/// Inclusion-minimal edges only; the minimal-transversal family is
/// preserved.
Hypergraph sperner_minimize(const Hypergraph& h, int* removed = nullptr);

bool is_sperner(const Hypergraph& h);

/// Minimal-transversal certificate: t hits every edge and every member of t
/// has a private edge.
bool is_minimal_transversal(const std::vector<Bitset>& edges, const Bitset& t);
bool is_transversal(const std::vector<Bitset>& edges, const Bitset& t);

/// Canonical deterministic order for set families (lexicographic).
void sort_family(std::vector<Bitset>& family);
/// Drop sets that properly contain another member; result sorted.
std::vector<Bitset> minimize_family(std::vector<Bitset> family);

}  // namespace domenum
