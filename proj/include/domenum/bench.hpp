#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "domenum/graph.hpp"

namespace domenum {

enum class ProblemKind { Mds, Tds, Cds };

ProblemKind parse_kind(const std::string& s);

/// Work-counter based delay measurements for one enumeration run (counters,
/// not wall clock: node expansions plus candidate validations for the
/// sequential engine, fold steps for the dualizer).
struct DelayReport {
    std::string family;
    std::string kind;
    int n = 0;
    std::uint64_t solutions = 0;
    std::uint64_t max_delay = 0;
    double mean_delay = 0.0;
    std::uint64_t pool_max = 0;
    bool truncated = false;  // stopped at the solution cap
};

/// Runs the enumeration and records inter-solution work deltas.
/// `max_solutions` of 0 means no cap.
DelayReport measure_delays(const Graph& g, ProblemKind kind, std::uint64_t max_solutions,
                           const std::string& family_label);

Graph make_k2n(int n);
Graph make_path(int n);

std::string delay_csv_header();
std::string delay_csv_row(const DelayReport& r);

}  // namespace domenum
