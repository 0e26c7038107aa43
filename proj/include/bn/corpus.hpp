#pragma once

#include <random>
#include <vector>

#include "bn/graph.hpp"

namespace bn {

// Connected graphs on exactly n vertices, one representative per isomorphism
// class (the lex-least adjacency mask), in mask order. Exhaustive scan over
// all labelled graphs, so n <= 7.
std::vector<Graph> enumerate_connected_graphs(int n);

// Free trees on exactly n vertices, one per isomorphism class, built by leaf
// augmentation with canonical-form deduplication. n <= 16.
std::vector<Graph> enumerate_trees(int n);

// Trees admitting a dominating diametrical path.
std::vector<Graph> enumerate_caterpillars(int n);

// Product of (ecc(v)+1): the state-space size the brute-force oracles walk.
long long oracle_state_space(const Graph& g);

// G(n,p) with p ~ U[p_min, p_max], resampled until connected and (when
// max_states > 0) until the oracle state space fits the budget.
Graph random_connected_graph(int n, std::mt19937_64& rng, double p_min = 0.35,
                             double p_max = 0.75, long long max_states = 0);

// Random spine length, pendant leaves on random interior spine vertices,
// labels shuffled.
Graph random_caterpillar(int n, std::mt19937_64& rng);

}  // namespace bn
