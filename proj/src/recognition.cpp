#include "domenum/recognition.hpp"

#include <algorithm>

#include "domenum/errors.hpp"

namespace domenum {

bool is_weak_simplicial(const Graph& g, int v, const Bitset& alive, WsViolation* witness) {
    Bitset nb = g.neighbors(v) & alive;
    auto nbs = nb.indices();
    for (std::size_t i = 0; i < nbs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbs.size(); ++j) {
            int x = nbs[i], y = nbs[j];
            if (g.adjacent(x, y)) {
                if (witness) *witness = {x, y, true};
                return false;
            }
            Bitset nx = g.neighbors(x) & alive;
            Bitset ny = g.neighbors(y) & alive;
            if (!nx.subset_of(ny) && !ny.subset_of(nx)) {
                if (witness) *witness = {x, y, false};
                return false;
            }
        }
    }
    return true;
}

bool is_weak_simplicial(const Graph& g, const std::string& id, WsViolation* witness) {
    return is_weak_simplicial(g, g.index_of(id), g.vertex_set(), witness);
}

bool verify_elimination_ordering(const Graph& g, const std::vector<int>& order) {
    if (int(order.size()) != g.n()) return false;
    Bitset prefix(g.n());
    for (int v : order) {
        prefix.set(v);
        if (!is_weak_simplicial(g, v, prefix)) return false;
    }
    return true;
}

std::optional<std::vector<int>> weak_simplicial_ordering(const Graph& g) {
    const int n = g.n();
    Bitset alive = Bitset::full(n);
    std::vector<int> peeled;
    peeled.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (alive.test(v) && is_weak_simplicial(g, v, alive)) pick = v;
        if (pick < 0) return std::nullopt;
        peeled.push_back(pick);
        alive.reset(pick);
    }
    std::vector<int> order(peeled.rbegin(), peeled.rend());
    // Peeling weak-simplicial vertices always yields a valid ordering in
    // reverse; the definition-level recheck guards the implementation.
    if (!verify_elimination_ordering(g, order))
        throw Error("internal: greedy ordering failed definition recheck");
    return order;
}

bool is_chordal_bipartite(const Graph& g) {
    return weak_simplicial_ordering(g).has_value();
}

std::variant<ChainOrders, NotChainWitness> chain_orders(const Graph& g, const Bitset& x,
                                                        const Bitset& y) {
    auto sorted_side = [&](const Bitset& side, const Bitset& other, bool ascending) {
        auto idx = side.indices();
        std::vector<std::pair<int, int>> keyed;
        for (int v : idx) keyed.emplace_back((g.neighbors(v) & other).count(), v);
        std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return ascending ? a.first < b.first : a.first > b.first;
            return a.second < b.second;
        });
        std::vector<int> out;
        for (auto& [d, v] : keyed) out.push_back(v);
        return out;
    };

    ChainOrders co;
    co.x_order = sorted_side(x, y, true);
    co.y_order = sorted_side(y, x, false);
    for (std::size_t i = 0; i + 1 < co.x_order.size(); ++i) {
        int u = co.x_order[i], v = co.x_order[i + 1];
        if (!(g.neighbors(u) & y).subset_of(g.neighbors(v) & y)) return NotChainWitness{u, v};
    }
    for (std::size_t i = 0; i + 1 < co.y_order.size(); ++i) {
        int u = co.y_order[i], v = co.y_order[i + 1];
        if (!(g.neighbors(v) & x).subset_of(g.neighbors(u) & x)) return NotChainWitness{u, v};
    }
    return co;
}

}  // namespace domenum
