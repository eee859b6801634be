#include "domenum/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "domenum/errors.hpp"

#include "json.hpp"

namespace domenum {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.push_back(std::move(tokens));
    }
    return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    Graph::Builder b;
    for (const auto& tokens : tokenize_lines(text)) {
        if (tokens.size() == 1) {
            b.add_vertex(tokens[0]);
        } else if (tokens.size() == 2) {
            b.add_edge(tokens[0], tokens[1]);
        } else {
            throw IoError("edge list line must have 1 or 2 tokens");
        }
    }
    return b.build();
}

Graph read_edge_list_file(const std::string& path) {
    return parse_edge_list(read_file(path));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.n(); ++v)
        if (g.neighbors(v).none()) out << g.id_of(v) << "\n";
    for (int u = 0; u < g.n(); ++u)
        (g.neighbors(u)).for_each([&](int v) {
            if (u < v) out << g.id_of(u) << " " << g.id_of(v) << "\n";
        });
    return out.str();
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<std::vector<std::string>> edges = tokenize_lines(text);
    return Hypergraph({}, edges);
}

Hypergraph read_hypergraph_file(const std::string& path) {
    return parse_hypergraph(read_file(path));
}

std::string emit_hypergraph(const Hypergraph& h) {
    auto edges = h.edges_as_ids();  // ids per edge are already sorted
    std::sort(edges.begin(), edges.end());
    std::ostringstream out;
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << content;
}

std::string format_solution(const std::vector<std::string>& ids) {
    std::ostringstream out;
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    return out.str();
}

std::string format_solution_jsonl(const std::vector<std::string>& ids, std::uint64_t index,
                                  std::uint64_t work) {
    nlohmann::json j;
    j["solution"] = ids;
    j["index"] = index;
    j["work"] = work;
    return j.dump();
}

}  // namespace domenum
