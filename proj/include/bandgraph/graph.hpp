#ifndef BANDGRAPH_GRAPH_HPP
#define BANDGRAPH_GRAPH_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bandgraph {

/// Simple undirected graph on vertices 1..n (1-based, matching line indices).
class Graph {
public:
    explicit Graph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
    }

    int vertex_count() const { return n_; }
    size_t edge_count() const { return edges_.size(); }
    size_t pair_count() const { return size_t(n_) * (n_ - 1) / 2; }

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;

    /// All unordered pairs {i, j}, i < j, in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    std::vector<std::pair<int, int>> non_edges() const;

    Graph complement() const;

    std::vector<int> degree_sequence() const;  // sorted ascending

    /// `n=<k>;edges=<i-j,...>` with edges sorted; parses the same format.
    std::string serialize() const;
    static Graph parse(std::string_view spec);

    /// Catalog name (A4, C5, G1, ...) or the n=/edges= format.
    static Graph from_spec(std::string_view spec);

    /// Named graphs: A<n> paths, C<n> cycles, G1, G2, G3, G6.
    static Graph catalog(std::string_view name);

    friend bool operator==(const Graph& x, const Graph& y) = default;

private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

}  // namespace bandgraph

#endif
