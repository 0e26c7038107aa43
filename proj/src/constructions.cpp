#include "bn/constructions.hpp"

#include <algorithm>

namespace bn {

CoronaInstance corona_k1(const Graph& g) {
    if (!g.connected()) throw PreconditionError("corona requires a connected base graph");
    int n = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    return CoronaInstance{Graph(2 * n, std::move(edges)), n};
}

Broadcast corona_witness_broadcast(const CoronaInstance& c, const VertexSet& independent) {
    int n = c.base_n;
    if (n < 2) throw PreconditionError("corona witness requires a base with at least two vertices");
    auto members = independent.to_vector();
    for (int a : members)
        for (int b : members)
            if (a < b && c.corona.adjacent(a, b))
                throw PreconditionError("witness set is not independent in the base");
    for (int a : members)
        if (a < 0 || a >= n) throw PreconditionError("witness set contains a non-base vertex");

    std::vector<int> f(2 * n, 0);
    for (int v = 0; v < n; ++v) f[c.leaf_of(v)] = independent.contains(v) ? 2 : 1;
    Broadcast out(c.corona, std::move(f));
    if (!is_boundary_independent_pairwise(out) || !is_boundary_independent_definitional(out))
        throw CheckError("corona witness failed verification on " + emit_graph6(c.corona));
    return out;
}

CoronaExtraction extract_is_from_corona_broadcast(const CoronaInstance& c, const Broadcast& f) {
    if (f.graph().order() != c.corona.order())
        throw PreconditionError("broadcast does not match the corona instance");
    if (c.base_n < 2)
        throw PreconditionError("corona extraction requires a base with at least two vertices");
    if (!is_boundary_independent_pairwise(f))
        throw PreconditionError("extraction requires a boundary-independent broadcast");
    int n = c.base_n;
    int start_cost = f.cost();
    std::vector<int> g = f.strengths();

    // shift base broadcasts to their leaves, one step further out
    for (int v = 0; v < n; ++v)
        if (g[v] >= 1) {
            g[c.leaf_of(v)] = g[v] + 1;
            g[v] = 0;
        }
    // leaves never need more than 2
    for (int v = 0; v < n; ++v) g[c.leaf_of(v)] = std::min(g[c.leaf_of(v)], 2);
    // silent leaves can always afford 1
    for (int v = 0; v < n; ++v) g[c.leaf_of(v)] = std::max(g[c.leaf_of(v)], 1);

    Broadcast normalized(c.corona, g);
    if (!is_boundary_independent_pairwise(normalized))
        throw CheckError("corona normalization lost boundary independence on " +
                         emit_graph6(c.corona));

    VertexSet base_set(c.corona.order());
    for (int v = 0; v < n; ++v)
        if (g[c.leaf_of(v)] == 2) base_set.insert(v);
    auto members = base_set.to_vector();
    for (int a : members)
        for (int b : members)
            if (a < b && c.corona.adjacent(a, b))
                throw CheckError("extracted base set not independent on " + emit_graph6(c.corona));
    if (base_set.count() < start_cost - n)
        throw CheckError("extracted base set smaller than cost - n on " + emit_graph6(c.corona));
    return CoronaExtraction{base_set, std::move(g)};
}

ReductionInstance reduce_is_decision(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("decision threshold must be >= 0");
    if (k > g.order())
        throw PreconditionError("independent sets cannot exceed the vertex count");
    CoronaInstance c = corona_k1(g);
    return ReductionInstance{std::move(c), g.order() + k};
}

bool is_generalized_spider(const Graph& g) {
    if (!g.is_tree()) return false;
    int heavy = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 3) ++heavy;
    return heavy == 1;
}

}  // namespace bn
