#include "domenum/graph.hpp"

#include <algorithm>
#include <queue>

#include "domenum/errors.hpp"

namespace domenum {

Graph::Builder& Graph::Builder::add_vertex(const std::string& id) {
    vertices_.push_back(id);
    return *this;
}

Graph::Builder& Graph::Builder::add_edge(const std::string& u, const std::string& v) {
    if (u == v) throw InvalidEdgeError("self-loop at vertex: " + u);
    vertices_.push_back(u);
    vertices_.push_back(v);
    edges_.emplace_back(u, v);
    return *this;
}

Graph Graph::Builder::build() const {
    Graph g;
    g.ids_ = vertices_;
    std::sort(g.ids_.begin(), g.ids_.end());
    g.ids_.erase(std::unique(g.ids_.begin(), g.ids_.end()), g.ids_.end());
    const int n = int(g.ids_.size());
    g.adj_.assign(n, Bitset(n));
    for (const auto& [u, v] : edges_) {
        int ui = g.index_of(u);
        int vi = g.index_of(v);
        if (!g.adj_[ui].test(vi)) ++g.m_;
        g.adj_[ui].set(vi);
        g.adj_[vi].set(ui);
    }
    return g;
}

int Graph::index_of(const std::string& id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) throw UnknownVertexError(id);
    return int(it - ids_.begin());
}

bool Graph::has_vertex(const std::string& id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

Bitset Graph::second_neighborhood(int v, const Bitset& within) const {
    Bitset near = adj_[v] & within;
    Bitset out(n());
    near.for_each([&](int u) { out |= adj_[u]; });
    out &= within;
    out -= near;
    out.reset(v);
    return out;
}

std::vector<std::string> Graph::ids_of(const Bitset& s) const {
    std::vector<std::string> out;
    s.for_each([&](int i) { out.push_back(ids_[i]); });
    return out;
}

Bitset Graph::set_of(const std::vector<std::string>& ids) const {
    Bitset b(n());
    for (const auto& id : ids) b.set(index_of(id));
    return b;
}

std::vector<Bitset> components(const Graph& g, const Bitset& removed) {
    const int n = g.n();
    std::vector<Bitset> out;
    Bitset seen = removed;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        Bitset comp(n);
        std::queue<int> q;
        q.push(s);
        seen.set(s);
        comp.set(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            g.neighbors(u).for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    q.push(w);
                }
            });
        }
        out.push_back(comp);
    }
    return out;
}

std::vector<Bitset> components_of(const Graph& g, const std::vector<std::string>& removed_ids) {
    return components(g, g.set_of(removed_ids));
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return components(g, Bitset(g.n())).size() == 1;
}

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    Bipartition bp{Bitset(n), Bitset(n)};
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            bool conflict = false;
            int cu = -1;
            g.neighbors(u).for_each([&](int w) {
                if (conflict) return;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    conflict = true;
                    cu = w;
                }
            });
            if (conflict) {
                // Walk both endpoints up to their common ancestor; the two
                // paths plus the edge u-cu form an odd cycle.
                std::vector<int> pu, pw;
                int a = u, b = cu;
                while (depth[a] > depth[b]) {
                    pu.push_back(a);
                    a = parent[a];
                }
                while (depth[b] > depth[a]) {
                    pw.push_back(b);
                    b = parent[b];
                }
                while (a != b) {
                    pu.push_back(a);
                    pw.push_back(b);
                    a = parent[a];
                    b = parent[b];
                }
                pu.push_back(a);
                OddCycle oc;
                oc.cycle = pu;
                for (auto it = pw.rbegin(); it != pw.rend(); ++it) oc.cycle.push_back(*it);
                return oc;
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? bp.side_a : bp.side_b).set(v);
    return bp;
}

bool is_bipartite(const Graph& g) {
    return std::holds_alternative<Bipartition>(bipartition(g));
}

Graph induced_subgraph(const Graph& g, const Bitset& keep) {
    Graph::Builder b;
    keep.for_each([&](int i) { b.add_vertex(g.id_of(i)); });
    keep.for_each([&](int i) {
        (g.neighbors(i) & keep).for_each([&](int j) {
            if (i < j) b.add_edge(g.id_of(i), g.id_of(j));
        });
    });
    return b.build();
}

}  // namespace domenum
