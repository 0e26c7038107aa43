#pragma once

#include <vector>

#include "bn/broadcast.hpp"
#include "bn/graph.hpp"

namespace bn {

// g with one pendant leaf per vertex; base keeps indices 0..n-1 and the leaf
// of vertex i is n+i.
struct CoronaInstance {
    Graph corona;
    int base_n;
    int leaf_of(int v) const { return base_n + v; }
    bool is_leaf(int v) const { return v >= base_n; }
    int base_of_leaf(int l) const { return l - base_n; }
};

CoronaInstance corona_k1(const Graph& g);

// Strength 2 on leaves of the chosen independent set, 1 on every other leaf,
// silence on the base. Requires base order >= 2 and an independent set.
Broadcast corona_witness_broadcast(const CoronaInstance& c, const VertexSet& independent);

// Normalizes a boundary-independent broadcast on the corona (shift base
// broadcasts to their leaves, clamp leaf strengths to 2, raise silent leaves
// to 1) and reads off the base vertices whose leaves land at strength 2.
// That set is independent in the base and has size >= cost(f) - base order.
struct CoronaExtraction {
    VertexSet base_set;
    std::vector<int> normalized;
};
CoronaExtraction extract_is_from_corona_broadcast(const CoronaInstance& c, const Broadcast& f);

// Decision-problem transport: alpha(g) >= k iff the corona has a
// boundary-independent broadcast of cost >= threshold (base order >= 2).
struct ReductionInstance {
    CoronaInstance corona;
    int threshold;
};
ReductionInstance reduce_is_decision(const Graph& g, int k);

// Tree with exactly one vertex of degree >= 3.
bool is_generalized_spider(const Graph& g);

}  // namespace bn
