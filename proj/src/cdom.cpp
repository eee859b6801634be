#include "domenum/cdom.hpp"

#include "domenum/errors.hpp"
#include "domenum/separators.hpp"

namespace domenum {

std::vector<Bitset> enumerate_mcds(const Graph& g, DualizeStats* stats) {
    if (!is_connected(g)) throw DisconnectedError();
    auto seps = minimal_separators(g);
    if (seps.sets.empty()) {
        // No separator at all: only complete graphs qualify, where the
        // minimal connected dominating sets are exactly the single vertices
        // whose closed neighborhood is everything.
        std::vector<Bitset> out;
        for (int v = 0; v < g.n(); ++v)
            if (g.closed_neighbors(v) == g.vertex_set()) out.push_back(Bitset::of(g.n(), {v}));
        sort_family(out);
        if (stats)
            for (std::size_t k = 0; k < out.size(); ++k) stats->emission_work.push_back(k + 1);
        return out;
    }
    // S(G) is an antichain by definition, so it is already Sperner.
    return berge_minimal_transversals(seps.sets, g.n(), stats);
}

std::vector<std::vector<std::string>> enumerate_mcds_ids(const Graph& g, DualizeStats* stats) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : enumerate_mcds(g, stats)) out.push_back(g.ids_of(s));
    return out;
}

}  // namespace domenum
