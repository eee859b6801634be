#include "domenum/bench.hpp"

#include <sstream>

#include "domenum/cdom.hpp"
#include "domenum/errors.hpp"
#include "domenum/extensions.hpp"

namespace domenum {

ProblemKind parse_kind(const std::string& s) {
    if (s == "mds") return ProblemKind::Mds;
    if (s == "tds") return ProblemKind::Tds;
    if (s == "cds") return ProblemKind::Cds;
    throw Error("unknown problem kind: " + s);
}

DelayReport measure_delays(const Graph& g, ProblemKind kind, std::uint64_t max_solutions,
                           const std::string& family_label) {
    DelayReport r;
    r.family = family_label;
    r.kind = kind == ProblemKind::Mds ? "mds" : kind == ProblemKind::Tds ? "tds" : "cds";
    r.n = g.n();

    std::vector<std::uint64_t> marks;  // work counter at each emission
    if (kind == ProblemKind::Cds) {
        DualizeStats stats;
        auto sols = enumerate_mcds(g, &stats);
        marks = stats.emission_work;
        if (max_solutions && marks.size() > max_solutions) {
            marks.resize(max_solutions);
            r.truncated = true;
        }
    } else {
        DominationEnumerator en(g, kind == ProblemKind::Mds ? Mode::Closed : Mode::Open);
        while (auto t = en.next()) {
            marks.push_back(en.stats().work());
            if (max_solutions && marks.size() >= max_solutions) {
                r.truncated = en.next().has_value();
                break;
            }
        }
        r.pool_max = en.stats().pool_max;
    }

    r.solutions = marks.size();
    std::uint64_t prev = 0, total = 0;
    for (auto m : marks) {
        std::uint64_t d = m - prev;
        r.max_delay = std::max(r.max_delay, d);
        total += d;
        prev = m;
    }
    r.mean_delay = marks.empty() ? 0.0 : double(total) / double(marks.size());
    return r;
}

Graph make_k2n(int n) {
    Graph::Builder b;
    int width = int(std::to_string(n).size());
    for (int j = 1; j <= n; ++j) {
        std::string num = std::to_string(j);
        std::string cj = "c" + std::string(width - int(num.size()), '0') + num;
        b.add_edge("a", cj);
        b.add_edge("b", cj);
    }
    return b.build();
}

Graph make_path(int n) {
    Graph::Builder b;
    int width = int(std::to_string(n).size());
    auto name = [&](int j) {
        std::string num = std::to_string(j);
        return "p" + std::string(width - int(num.size()), '0') + num;
    };
    if (n == 1) b.add_vertex(name(1));
    for (int j = 1; j < n; ++j) b.add_edge(name(j), name(j + 1));
    return b.build();
}

std::string delay_csv_header() {
    return "family,kind,n,solutions,max_delay,mean_delay,pool_max,max_delay_over_n4,truncated";
}

std::string delay_csv_row(const DelayReport& r) {
    std::ostringstream out;
    double n4 = double(r.n) * r.n * r.n * r.n;
    out << r.family << "," << r.kind << "," << r.n << "," << r.solutions << "," << r.max_delay
        << "," << r.mean_delay << "," << r.pool_max << "," << (n4 > 0 ? double(r.max_delay) / n4 : 0)
        << "," << (r.truncated ? 1 : 0);
    return out.str();
}

}  // namespace domenum
