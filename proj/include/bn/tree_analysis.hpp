#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bn/broadcast.hpp"
#include "bn/graph.hpp"

namespace bn {

// Degree partition of a tree: branches (>= 3), leaves (1), trunks (2).
// eligible_branches are the branches adjacent to at most one leaf after
// suppressing all trunks; only these can still broadcast in a maximum
// boundary-independent broadcast.
struct TreePartition {
    VertexSet branches;
    VertexSet leaves;
    VertexSet trunks;
    VertexSet eligible_branches;
};

// Homeomorphic reduction: suppress every trunk, keep branch and leaf
// identities. A path collapses to a single edge.
struct BranchLeafReduction {
    Graph reduced;
    std::vector<int> to_reduced;   // original -> reduced, -1 for trunks
    std::vector<int> to_original;  // reduced -> original
};
BranchLeafReduction branch_leaf_representation(const Graph& tree);

TreePartition classify(const Graph& tree);

// n - |branches| + |eligible branches|; requires at least one branch.
int neilson_tree_bound(const Graph& tree);

// Spine is a diametrical path; every vertex is on it or adjacent to it.
// leaf_order starts and ends with the spine endpoints, middle leaves sorted
// by distance from the first endpoint (ties by index).
struct CaterpillarShape {
    std::vector<int> spine;
    std::vector<int> leaf_order;
    std::vector<int> inner_leaves;
};
std::optional<CaterpillarShape> is_caterpillar(const Graph& tree);

// Same, with an explicit starting vertex for the double-BFS spine search;
// used to confirm results do not depend on the spine choice.
std::optional<CaterpillarShape> caterpillar_shape_from(const Graph& tree, int bfs_start);

// Cost-preserving rewrite around an inner leaf broadcasting at >= 3: the
// leaf drops to 1 (odd strength) or 2 (even), and strength-one broadcasts
// fill alternate vertices of its old ball. Strictly increases the number of
// strength-one broadcasters. The spine endpoints must be broadcasting.
Broadcast rebalance_inner_leaf(const Broadcast& f, const CaterpillarShape& shape, int leaf);

// n - |branches| + alpha on the subgraph induced by the eligible branches.
// That subgraph is a disjoint union of paths; its alpha is computed in
// closed form and cross-checked against the exact solver.
int caterpillar_bound(const Graph& tree);

enum class Cor55Case { trunkless, isolated_trunks };
enum class Cor55Status { not_applicable, ok, witness_rejected };

// Closed-form optimum for two caterpillar families: (i) no trunks at all;
// (ii) no two adjacent trunks and no vertex of degree exactly 3. The
// constructed witness is re-verified; configurations where it fails (a
// spine endpoint adjacent to a trunk) come back as witness_rejected.
struct Corollary55Result {
    Cor55Status status = Cor55Status::not_applicable;
    Cor55Case which = Cor55Case::trunkless;
    int value = 0;
    std::vector<int> witness;
};
Corollary55Result corollary_55(const Graph& tree);

// Does n - |branches| + alpha(induced eligible branches) bound the optimum
// on every tree? Compares the oracle against the candidate bound; a
// violation is a reportable finding, not an error.
struct Question61Record {
    std::string graph6;
    int n = 0;
    bool skipped = false;
    std::string skip_reason;
    int branch_count = 0;
    int eligible_count = 0;
    int bound = 0;
    int alpha_bn = 0;
    bool violation = false;
};
std::vector<Question61Record> search_question_61(const std::vector<Graph>& trees);

}  // namespace bn
