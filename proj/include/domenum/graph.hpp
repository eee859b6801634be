#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domenum/bitset.hpp"

namespace domenum {

/// Simple finite undirected graph. Vertex ids are opaque strings mapped to
/// dense indices in lexicographic id order; all set machinery runs on the
/// indices and output is translated back to ids.
class Graph {
public:
    class Builder {
    public:
        Builder& add_vertex(const std::string& id);
        Builder& add_edge(const std::string& u, const std::string& v);
        Graph build() const;

    private:
        std::vector<std::string> vertices_;
        std::vector<std::pair<std::string, std::string>> edges_;
    };

    int n() const { return int(ids_.size()); }
    int edge_count() const { return m_; }

    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id_of(int i) const { return ids_[i]; }
    /// Dense index of `id`; throws UnknownVertexError if absent.
    int index_of(const std::string& id) const;
    bool has_vertex(const std::string& id) const;

    const Bitset& neighbors(int i) const { return adj_[i]; }
    Bitset closed_neighbors(int i) const {
        Bitset b = adj_[i];
        b.set(i);
        return b;
    }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int i) const { return adj_[i].count(); }

    /// N2(v) restricted to `within`: vertices at distance exactly two from v
    /// in the induced subgraph on `within` (v assumed in `within`).
    Bitset second_neighborhood(int v, const Bitset& within) const;

    Bitset vertex_set() const { return Bitset::full(n()); }

    std::vector<std::string> ids_of(const Bitset& s) const;
    Bitset set_of(const std::vector<std::string>& ids) const;

private:
    friend class Builder;
    std::vector<std::string> ids_;
    std::vector<Bitset> adj_;
    int m_ = 0;
};

struct Bipartition {
    Bitset side_a;
    Bitset side_b;
};

struct OddCycle {
    std::vector<int> cycle;  // vertices of an odd cycle, in order
};

/// Connected components of G - removed, ordered by smallest contained index.
std::vector<Bitset> components(const Graph& g, const Bitset& removed);
std::vector<Bitset> components_of(const Graph& g, const std::vector<std::string>& removed_ids);

bool is_connected(const Graph& g);

/// Two-coloring per component (the component's smallest vertex anchors side
/// A), or an odd-cycle witness.
std::variant<Bipartition, OddCycle> bipartition(const Graph& g);

bool is_bipartite(const Graph& g);

/// Induced subgraph on `keep`, preserving the surviving vertex ids.
Graph induced_subgraph(const Graph& g, const Bitset& keep);

}  // namespace domenum
