#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bn/errors.hpp"

namespace bn {

// Dense set of vertex indices over a fixed universe 0..n-1.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { bits_[v >> 6] |= uint64_t{1} << (v & 63); }
    void erase(int v) { bits_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const;
    bool empty() const { return count() == 0; }

    bool is_subset_of(const VertexSet& other) const;
    VertexSet intersect(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;

    std::vector<int> to_vector() const;
    static VertexSet of(int universe, const std::vector<int>& members);

    bool operator==(const VertexSet&) const = default;

  private:
    int n_ = 0;
    std::vector<uint64_t> bits_;
};

// Immutable simple undirected graph. All-pairs BFS distances are computed at
// construction; dist() returns kUnreachable across components.
class Graph {
  public:
    static constexpr int kUnreachable = -1;

    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int dist(int u, int v) const { return dist_[u][v]; }
    const std::vector<int>& dist_row(int v) const { return dist_[v]; }

    bool connected() const { return connected_; }
    bool is_tree() const { return connected_ && size() == order() - 1; }

    // These require a connected graph.
    int eccentricity(int v) const;
    int diameter() const;
    int radius() const;

    int min_degree() const;
    int max_degree() const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
    std::vector<int> ecc_;
    bool connected_;
};

struct Metrics {
    int n;
    int m;
    bool connected;
    bool tree;
    int diameter;  // kUnreachable when disconnected
    int min_degree;
    int max_degree;
};
Metrics metrics(const Graph& g);

// Text with one "u v" pair per line. An optional header "n <count>" fixes the
// vertex count (allowing isolated vertices); otherwise it is 1 + max index.
// '#' starts a comment. Self-loops and malformed lines are rejected with the
// offending line number.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6, short form only (n < 63); inputs needing the long header are
// rejected as beyond desk scale. An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

std::string to_dot(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;     // parent index -> sub index, -1 if dropped
    std::vector<int> to_parent;  // sub index -> parent index
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace bn
