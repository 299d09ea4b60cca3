#include "bandgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace bandgraph {

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("graph: bad " + std::string(what) + " '" + std::string(s) +
                                    "'");
    return value;
}

}  // namespace

void Graph::add_edge(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw std::invalid_argument("graph: vertex out of range in edge " + std::to_string(i) +
                                    "-" + std::to_string(j));
    if (i == j)
        throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (!edges_.insert({i, j}).second)
        throw std::invalid_argument("graph: duplicate edge " + std::to_string(i) + "-" +
                                    std::to_string(j));
}

bool Graph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges_.count({i, j}) > 0;
}

std::vector<std::pair<int, int>> Graph::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j) out.push_back({i, j});
    return out;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (auto p : pairs())
        if (!edges_.count(p)) out.push_back(p);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (auto p : non_edges()) g.add_edge(p.first, p.second);
    return g;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(n_, 0);
    for (auto [i, j] : edges_) {
        ++deg[i - 1];
        ++deg[j - 1];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::string Graph::serialize() const {
    std::string out = "n=" + std::to_string(n_) + ";edges=";
    bool first = true;
    for (auto [i, j] : edges_) {  // std::set iterates in sorted order
        if (!first) out += ",";
        first = false;
        out += std::to_string(i) + "-" + std::to_string(j);
    }
    return out;
}

Graph Graph::parse(std::string_view spec) {
    if (spec.substr(0, 2) != "n=") throw std::invalid_argument("graph: spec must start with n=");
    size_t semi = spec.find(';');
    if (semi == std::string_view::npos || spec.substr(semi + 1, 6) != "edges=")
        throw std::invalid_argument("graph: spec must contain ;edges=");
    Graph g(parse_int(spec.substr(2, semi - 2), "vertex count"));
    std::string_view rest = spec.substr(semi + 7);
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        size_t dash = item.find('-');
        if (dash == std::string_view::npos)
            throw std::invalid_argument("graph: edge '" + std::string(item) + "' lacks '-'");
        g.add_edge(parse_int(item.substr(0, dash), "vertex"),
                   parse_int(item.substr(dash + 1), "vertex"));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return g;
}

Graph Graph::from_spec(std::string_view spec) {
    if (spec.substr(0, 2) == "n=") return parse(spec);
    return catalog(spec);
}

Graph Graph::catalog(std::string_view name) {
    auto path = [](int n) {
        Graph g(n);
        for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
        return g;
    };
    auto cycle = [&](int n) {
        Graph g = path(n);
        g.add_edge(1, n);
        return g;
    };
    auto from_edges = [](int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [i, j] : edges) g.add_edge(i, j);
        return g;
    };

    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'C')) {
        int n = parse_int(name.substr(1), "catalog size");
        if (name[0] == 'A') {
            if (n < 2) throw std::invalid_argument("graph: A_n needs n >= 2");
            return path(n);
        }
        if (n < 3) throw std::invalid_argument("graph: C_n needs n >= 3");
        return cycle(n);
    }
    if (name == "G1") return from_edges(5, {{1, 4}, {4, 5}, {5, 2}, {1, 2}, {2, 3}});
    if (name == "G2") return from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    if (name == "G3") return from_edges(5, {{1, 2}, {2, 3}, {1, 4}, {4, 2}, {2, 5}, {5, 3}});
    if (name == "G6") {
        Graph g = cycle(5);  // wheel: pentagon rim...
        Graph w(6);
        for (auto [i, j] : g.edges()) w.add_edge(i, j);
        for (int i = 1; i <= 5; ++i) w.add_edge(i, 6);  // ...plus hub
        return w;
    }
    throw std::invalid_argument("graph: unknown catalog name '" + std::string(name) + "'");
}

}  // namespace bandgraph
