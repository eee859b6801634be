#include "domenum/dualize.hpp"

#include <algorithm>

namespace domenum {

std::vector<Bitset> berge_minimal_transversals(std::vector<Bitset> edges, int n,
                                               DualizeStats* stats) {
    std::sort(edges.begin(), edges.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.lex_less(b);
    });
    std::uint64_t work = 0;
    std::vector<Bitset> partial{Bitset(n)};
    for (const auto& e : edges) {
        std::vector<Bitset> next;
        for (const auto& t : partial) {
            if (t.intersects(e)) {
                next.push_back(t);
                ++work;
                continue;
            }
            e.for_each([&](int v) {
                Bitset grown = t;
                grown.set(v);
                next.push_back(grown);
                ++work;
            });
        }
        // Sperner-minimize the fold before moving on.
        std::size_t before = next.size();
        next = minimize_family(std::move(next));
        work += before;
        partial = std::move(next);
    }
    sort_family(partial);
    if (stats) {
        stats->work += work;
        for (std::size_t k = 0; k < partial.size(); ++k)
            stats->emission_work.push_back(stats->work + k + 1);
    }
    return partial;
}

std::vector<Bitset> incremental_dualize(const Hypergraph& h, DualizeStats* stats) {
    return berge_minimal_transversals(h.edges(), h.n(), stats);
}

}  // namespace domenum
