#include "domenum/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "domenum/errors.hpp"
#include "domenum/recognition.hpp"

namespace domenum {

namespace {

std::string vertex_name(int i, int n) {
    std::string num = std::to_string(i + 1);
    std::string width = std::to_string(n);
    return "v" + std::string(width.size() - num.size(), '0') + num;
}

}  // namespace

Graph generate_chordal_bipartite(int n, double density, std::uint64_t seed) {
    if (n < 1) throw GenerationFailedError("need at least one vertex");
    std::mt19937_64 rng(seed);
    // adjacency over the insertion indices
    std::vector<std::vector<int>> adj(n);
    auto adjacent = [&](int u, int v) {
        return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
    };
    auto neighborhood_subset = [&](int u, int v) {  // N(u) subseteq N(v)
        for (int w : adj[u])
            if (!adjacent(v, w)) return false;
        return true;
    };
    auto valid_neighbor_set = [&](const std::vector<int>& s) {
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                if (adjacent(s[a], s[b])) return false;
                if (!neighborhood_subset(s[a], s[b]) && !neighborhood_subset(s[b], s[a]))
                    return false;
            }
        return true;
    };

    constexpr int kRetries = 60;
    for (int i = 1; i < n; ++i) {
        std::binomial_distribution<int> deg(i, std::clamp(density, 0.0, 1.0));
        int want = deg(rng);
        if (want < 1 && density > 0.0) want = 1;  // bias toward connectivity
        std::vector<int> pool(i);
        for (int k = 0; k < i; ++k) pool[k] = k;
        bool placed = false;
        for (int d = want; d >= 1 && !placed; --d) {
            for (int attempt = 0; attempt < kRetries && !placed; ++attempt) {
                std::shuffle(pool.begin(), pool.end(), rng);
                std::vector<int> s(pool.begin(), pool.begin() + d);
                if (valid_neighbor_set(s)) {
                    for (int u : s) {
                        adj[u].push_back(i);
                        adj[i].push_back(u);
                    }
                    placed = true;
                }
            }
        }
        // d = 0 (isolated addition) is always valid.
    }

    Graph::Builder b;
    for (int i = 0; i < n; ++i) b.add_vertex(vertex_name(i, n));
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            if (i < j) b.add_edge(vertex_name(i, n), vertex_name(j, n));
    Graph g = b.build();
    if (!is_chordal_bipartite(g))
        throw GenerationFailedError("generated graph failed certification");
    return g;
}

}  // namespace domenum
