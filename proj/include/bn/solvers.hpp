#pragma once

#include <vector>

#include "bn/broadcast.hpp"
#include "bn/graph.hpp"

namespace bn {

struct SearchStats {
    long long nodes = 0;
    long long pruned = 0;
};

struct SetSolveResult {
    int value;
    VertexSet witness;
    SearchStats stats;
};

struct BroadcastSolveResult {
    int value;
    std::vector<int> witness;
    SearchStats stats;
};

// Maximum independent set; witness is the lexicographically least maximum
// set. Works on disconnected graphs (used for induced forests).
SetSolveResult solve_alpha(const Graph& g);

// Maximum-cost boundary-independent broadcast, exact branch and bound over
// strength assignments in descending-eccentricity vertex order. Witness is
// re-verified by both boundary-independence checks before returning.
BroadcastSolveResult solve_alpha_bn(const Graph& g);

// Maximum-cost hearing-independent broadcast, same search skeleton.
BroadcastSolveResult solve_alpha_h(const Graph& g);

// Trusted oracles: enumerate every strength vector under the eccentricity
// cap and filter by the definitional verifier. No other pruning. Hard cap
// n <= 10 (the state space is the product of ecc+1 over all vertices).
int brute_force_alpha_bn(const Graph& g);
int brute_force_alpha_h(const Graph& g);

// Same enumeration, returning every optimum (for exhaustive structural
// property checks on small trees).
struct BnOptima {
    int value;
    std::vector<std::vector<int>> witnesses;
};
BnOptima brute_force_bn_optima(const Graph& g);

// One rewrite round of the cost-halving extraction: the strongest
// broadcaster's boundary pins a geodesic subtree whose leaves stop
// broadcasting and whose larger colour class broadcasts at strength one.
struct ExtractionStep {
    int center;                  // the boundary vertex u the subtree hangs on
    int strongest;               // broadcaster picked this round
    std::vector<int> heard_set;  // broadcasters heard by u (all on boundary)
    int subtree_size;
    std::vector<int> chosen_class;
};

struct ExtractionResult {
    VertexSet independent_set;
    std::vector<ExtractionStep> steps;
};

// Rewrites a boundary-independent broadcast into an independent set. Every
// intermediate broadcast is re-verified; a verification failure aborts with
// a diagnostic carrying the offending graph.
ExtractionResult extract_independent_set(const Broadcast& f);

}  // namespace bn
