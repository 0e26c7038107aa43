#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bn/graph.hpp"

namespace bn {

// f: V -> {0..diam} with f(v) <= ecc(v). Requires a connected graph on at
// least two vertices; the all-zero map is allowed.
class Broadcast {
  public:
    Broadcast(const Graph& g, std::vector<int> strengths);
    // The graph must outlive the broadcast; only a reference is kept.
    Broadcast(Graph&&, std::vector<int>) = delete;

    const Graph& graph() const { return *g_; }
    const std::vector<int>& strengths() const { return f_; }
    int strength(int v) const { return f_[v]; }

    int cost() const;                          // sigma(f)
    std::vector<int> broadcasters() const;     // f(v) >= 1
    std::vector<int> strength_one() const;     // f(v) == 1
    std::vector<int> strength_over_one() const;  // f(v) >= 2

  private:
    const Graph* g_;
    std::vector<int> f_;
};

struct BroadcastAnalysis {
    VertexSet broadcasters;
    // Indexed by vertex; meaningful only at broadcasters, empty elsewhere.
    std::vector<VertexSet> hearers;           // within distance f(v) of v, v included
    std::vector<VertexSet> boundary;          // at distance exactly f(v)
    std::vector<VertexSet> private_hearers;   // hear v and nobody else
    std::vector<VertexSet> private_boundary;  // boundary ∩ private
    std::vector<VertexSet> sources;           // per vertex u: broadcasters u hears
    VertexSet undominated;                    // hear nothing
    // Parallel to graph().edges(): broadcasters covering each edge. An edge
    // uv is covered by w when both ends hear w and at least one end is
    // strictly inside w's ball.
    std::vector<VertexSet> edge_cover;
    std::vector<std::pair<int, int>> uncovered_edges;
};

BroadcastAnalysis analyze(const Broadcast& f);

// Broadcasters that hear u from strictly inside their ball, with the slack
// f(v) - d(u,v) >= 1. A broadcaster overdominates itself by f(v).
std::vector<std::pair<int, int>> overdomination(const Broadcast& f, int u);

bool is_dominating(const Broadcast& f);

// No broadcaster hears another.
bool is_hearing_independent(const Broadcast& f);

// Set-containment form: every vertex strictly inside a broadcaster's ball is
// private to that broadcaster.
bool is_boundary_independent_definitional(const Broadcast& f);

// Pairwise form: f(u) + f(v) <= d(u,v) for distinct broadcasters.
bool is_boundary_independent_pairwise(const Broadcast& f);

// {"n": ..., "strengths": [...]} on one line.
std::string broadcast_to_json(const Broadcast& f);
Broadcast broadcast_from_json(const Graph& g, const std::string& text);

}  // namespace bn
