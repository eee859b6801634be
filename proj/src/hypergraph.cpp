#include "domenum/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "domenum/errors.hpp"

namespace domenum {

Hypergraph::Hypergraph(std::vector<std::string> vertex_ids,
                       const std::vector<std::vector<std::string>>& edges) {
    ids_ = std::move(vertex_ids);
    for (const auto& e : edges)
        for (const auto& v : e) ids_.push_back(v);
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (const auto& e : edges) {
        Bitset b(n());
        for (const auto& v : e) b.set(index_of(v));
        edges_.push_back(b);
    }
    collapse_duplicates();
}

Hypergraph::Hypergraph(const Graph& g, std::vector<Bitset> edges) {
    ids_ = g.ids();
    edges_ = std::move(edges);
    collapse_duplicates();
}

int Hypergraph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UnknownVertexError(id);
    return int(it - ids_.begin());
}

void Hypergraph::collapse_duplicates() {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Bitset> unique;
    for (const auto& e : edges_) {
        if (seen.insert(e).second)
            unique.push_back(e);
        else
            ++duplicates_collapsed_;
    }
    edges_ = std::move(unique);
}

Bitset Hypergraph::support() const {
    Bitset s(n());
    for (const auto& e : edges_) s |= e;
    return s;
}

std::vector<int> Hypergraph::incident(int v) const {
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].test(v)) out.push_back(e);
    return out;
}

std::vector<std::vector<std::string>> Hypergraph::edges_as_ids() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& e : edges_) {
        std::vector<std::string> ids;
        e.for_each([&](int i) { ids.push_back(ids_[i]); });
        out.push_back(std::move(ids));
    }
    return out;
}

Hypergraph closed_neighborhood_hypergraph(const Graph& g) {
    std::vector<Bitset> edges;
    edges.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) edges.push_back(g.closed_neighbors(v));
    return Hypergraph(g, std::move(edges));
}

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
    std::vector<Bitset> edges;
    edges.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (g.neighbors(v).none()) throw IsolatedVertexError(g.id_of(v));
        edges.push_back(g.neighbors(v));
    }
    return Hypergraph(g, std::move(edges));
}

Hypergraph sperner_minimize(const Hypergraph& h, int* removed) {
    auto minimal = minimize_family(h.edges());
    if (removed) *removed = h.edge_count() - int(minimal.size());
    Hypergraph out = h;
    out.replace_edges(std::move(minimal));
    return out;
}

bool is_sperner(const Hypergraph& h) {
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            if (i != j && es[i].subset_of(es[j])) return false;
    return true;
}

bool is_transversal(const std::vector<Bitset>& edges, const Bitset& t) {
    for (const auto& e : edges)
        if (!e.intersects(t)) return false;
    return true;
}

bool is_minimal_transversal(const std::vector<Bitset>& edges, const Bitset& t) {
    if (!is_transversal(edges, t)) return false;
    // every member needs a private edge
    bool ok = true;
    t.for_each([&](int v) {
        if (!ok) return;
        bool priv = false;
        for (const auto& e : edges) {
            if (!e.test(v)) continue;
            Bitset rest = e & t;
            rest.reset(v);
            if (rest.none()) {
                priv = true;
                break;
            }
        }
        if (!priv) ok = false;
    });
    return ok;
}

void sort_family(std::vector<Bitset>& family) {
    std::sort(family.begin(), family.end(), BitsetLess{});
}

std::vector<Bitset> minimize_family(std::vector<Bitset> family) {
    std::sort(family.begin(), family.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.lex_less(b);
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    std::vector<Bitset> kept;
    for (const auto& e : family) {
        bool dominated = false;
        for (const auto& k : kept)
            if (k.subset_of(e)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(e);
    }
    sort_family(kept);
    return kept;
}

}  // namespace domenum
