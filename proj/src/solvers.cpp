#include "bn/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace bn {

namespace {

struct MisSolver {
    std::vector<uint64_t> closed;  // N[v] as a mask
    std::unordered_map<uint64_t, int> memo;
    long long nodes = 0;

    explicit MisSolver(const Graph& g) {
        int n = g.order();
        closed.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            closed[v] = uint64_t{1} << v;
            for (int w : g.neighbors(v)) closed[v] |= uint64_t{1} << w;
        }
    }

    int size(uint64_t mask) {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        ++nodes;
        int v = std::countr_zero(mask);
        int best = std::max(size(mask & ~(uint64_t{1} << v)), 1 + size(mask & ~closed[v]));
        memo.emplace(mask, best);
        return best;
    }
};

}  // namespace

SetSolveResult solve_alpha(const Graph& g) {
    int n = g.order();
    if (n > 64) throw PreconditionError("independent-set solver is desk-scale only (n <= 64)");
    MisSolver mis(g);
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    int target = mis.size(full);

    VertexSet witness(n);
    uint64_t avail = full;
    int have = 0;
    for (int v = 0; v < n && have < target; ++v) {
        if (!((avail >> v) & 1)) continue;
        if (have + 1 + mis.size(avail & ~mis.closed[v]) == target) {
            witness.insert(v);
            ++have;
            avail &= ~mis.closed[v];
        } else {
            avail &= ~(uint64_t{1} << v);
        }
    }
    if (have != target) throw CheckError("independent-set witness reconstruction failed");
    for (int u : witness.to_vector())
        for (int w : witness.to_vector())
            if (u < w && g.adjacent(u, w)) throw CheckError("independent-set witness not independent");
    return SetSolveResult{target, witness, SearchStats{mis.nodes, 0}};
}

namespace {

// Shared branch-and-bound over strength vectors. The pairwise feasibility
// rule is injected via the cap update: assigning strength s at v lowers the
// later cap of w to cap_rule(d(v,w), s).
struct BroadcastSearch {
    const Graph& g;
    int n;
    std::vector<int> order;   // descending eccentricity, then index
    std::vector<int> caps;    // current cap per vertex
    std::vector<int> f;
    std::vector<int> best_f;
    int best = -1;
    int stop_at;              // root upper bound; search halts once reached
    SearchStats stats;
    int (*cap_rule)(int dist, int strength);

    BroadcastSearch(const Graph& graph, int root_bound, int (*rule)(int, int))
        : g(graph), n(graph.order()), stop_at(root_bound), cap_rule(rule) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.eccentricity(a) != g.eccentricity(b))
                return g.eccentricity(a) > g.eccentricity(b);
            return a < b;
        });
        caps.resize(n);
        for (int v = 0; v < n; ++v) caps[v] = g.eccentricity(v);
        f.assign(n, 0);
        best_f.assign(n, 0);
    }

    void run() { dfs(0, 0); }

    void dfs(int depth, int cost) {
        ++stats.nodes;
        if (best >= stop_at) return;
        if (depth == n) {
            if (cost > best) {
                best = cost;
                best_f = f;
            }
            return;
        }
        long long potential = cost;
        for (int i = depth; i < n; ++i) potential += std::max(0, caps[order[i]]);
        if (potential <= best) {
            ++stats.pruned;
            return;
        }
        int v = order[depth];
        for (int s = std::max(0, caps[v]); s >= 0; --s) {
            f[v] = s;
            if (s == 0) {
                dfs(depth + 1, cost);
            } else {
                std::vector<int> saved;
                saved.reserve(n - depth - 1);
                for (int i = depth + 1; i < n; ++i) {
                    int w = order[i];
                    saved.push_back(caps[w]);
                    caps[w] = std::min(caps[w], cap_rule(g.dist(v, w), s));
                }
                dfs(depth + 1, cost + s);
                for (int i = depth + 1; i < n; ++i) caps[order[i]] = saved[i - depth - 1];
            }
        }
        f[v] = 0;
    }
};

int bn_cap(int dist, int strength) { return dist - strength; }
int hearing_cap(int dist, int strength) { return strength >= dist ? 0 : dist - 1; }

}  // namespace

BroadcastSolveResult solve_alpha_bn(const Graph& g) {
    if (!g.connected()) throw PreconditionError("solver requires a connected graph");
    if (g.order() < 2) throw PreconditionError("solver requires at least two vertices");
    int root_bound = std::min(g.order() - 1, g.order() - g.min_degree());
    BroadcastSearch search(g, root_bound, bn_cap);
    search.run();
    Broadcast witness(g, search.best_f);
    if (witness.cost() != search.best || !is_boundary_independent_pairwise(witness) ||
        !is_boundary_independent_definitional(witness))
        throw CheckError("bn witness failed re-verification on " + emit_graph6(g));
    return BroadcastSolveResult{search.best, search.best_f, search.stats};
}

BroadcastSolveResult solve_alpha_h(const Graph& g) {
    if (!g.connected()) throw PreconditionError("solver requires a connected graph");
    if (g.order() < 2) throw PreconditionError("solver requires at least two vertices");
    BroadcastSearch search(g, g.order() * g.diameter() + 1, hearing_cap);
    search.run();
    Broadcast witness(g, search.best_f);
    if (witness.cost() != search.best || !is_hearing_independent(witness))
        throw CheckError("hearing witness failed re-verification on " + emit_graph6(g));
    return BroadcastSolveResult{search.best, search.best_f, search.stats};
}

namespace {

constexpr int kOracleCap = 10;

// Exhaustive product-space walk with the set-containment filter evaluated at
// the leaves via precomputed ball/sphere bitmasks.
struct OracleEnumerator {
    int n;
    std::vector<std::vector<uint16_t>> ball;    // ball[v][r], r <= ecc(v)
    std::vector<std::vector<uint16_t>> sphere;  // exact distance r
    std::vector<int> ecc;
    std::vector<int> f;

    // per-broadcaster data pushed along the current branch
    uint16_t inside[kOracleCap];   // strictly inside each broadcaster's ball
    uint16_t heard[kOracleCap];    // full ball of each broadcaster
    int owner[kOracleCap];         // broadcaster vertex
    bool collect = false;
    int best = -1;
    std::vector<std::vector<int>> optima;

    explicit OracleEnumerator(const Graph& g) : n(g.order()) {
        if (!g.connected()) throw PreconditionError("oracle requires a connected graph");
        if (n < 2) throw PreconditionError("oracle requires at least two vertices");
        if (n > kOracleCap) throw PreconditionError("oracle is desk-scale only");
        ball.assign(n, {});
        sphere.assign(n, {});
        ecc.resize(n);
        for (int v = 0; v < n; ++v) {
            ecc[v] = g.eccentricity(v);
            ball[v].assign(ecc[v] + 1, 0);
            sphere[v].assign(ecc[v] + 1, 0);
            for (int u = 0; u < n; ++u) {
                int d = g.dist(v, u);
                sphere[v][d] |= uint16_t(1) << u;
                for (int r = d; r <= ecc[v]; ++r) ball[v][r] |= uint16_t(1) << u;
            }
        }
        f.assign(n, 0);
    }

    void run_bn() { walk_bn(0, 0, 0, 0, 0); }

    void walk_bn(int v, int k, int cost, uint16_t heard_any, uint16_t heard_twice) {
        if (v == n) {
            for (int i = 0; i < k; ++i)
                if (inside[i] & heard_twice) return;
            take(cost);
            return;
        }
        walk_bn(v + 1, k, cost, heard_any, heard_twice);
        for (int s = 1; s <= ecc[v]; ++s) {
            uint16_t nf = ball[v][s];
            inside[k] = nf & uint16_t(~sphere[v][s]);
            f[v] = s;
            walk_bn(v + 1, k + 1, cost + s, heard_any | nf, heard_twice | (heard_any & nf));
        }
        f[v] = 0;
    }

    void run_hearing() { walk_hearing(0, 0, 0, 0); }

    void walk_hearing(int v, int k, int cost, uint16_t bmask) {
        if (v == n) {
            for (int i = 0; i < k; ++i)
                if (heard[i] & (bmask ^ (uint16_t(1) << owner[i]))) return;
            take(cost);
            return;
        }
        walk_hearing(v + 1, k, cost, bmask);
        for (int s = 1; s <= ecc[v]; ++s) {
            heard[k] = ball[v][s];
            owner[k] = v;
            f[v] = s;
            walk_hearing(v + 1, k + 1, cost + s, bmask | (uint16_t(1) << v));
        }
        f[v] = 0;
    }

    void take(int cost) {
        if (cost > best) {
            best = cost;
            if (collect) {
                optima.clear();
                optima.push_back(f);
            }
        } else if (collect && cost == best) {
            optima.push_back(f);
        }
    }
};

}  // namespace

int brute_force_alpha_bn(const Graph& g) {
    OracleEnumerator e(g);
    e.run_bn();
    return e.best;
}

int brute_force_alpha_h(const Graph& g) {
    OracleEnumerator e(g);
    e.run_hearing();
    return e.best;
}

BnOptima brute_force_bn_optima(const Graph& g) {
    OracleEnumerator e(g);
    e.collect = true;
    e.run_bn();
    return BnOptima{e.best, std::move(e.optima)};
}

ExtractionResult extract_independent_set(const Broadcast& start) {
    if (!is_boundary_independent_pairwise(start))
        throw PreconditionError("extraction requires a boundary-independent broadcast");
    const Graph& g = start.graph();
    int n = g.order();
    std::vector<int> f = start.strengths();
    std::vector<ExtractionStep> steps;

    // lowest-index BFS parents from a root, for deterministic geodesics
    auto parents_from = [&](int root) {
        std::vector<int> parent(n, -1);
        for (int w = 0; w < n; ++w) {
            if (w == root || g.dist(root, w) == Graph::kUnreachable) continue;
            for (int p : g.neighbors(w))
                if (g.dist(root, p) == g.dist(root, w) - 1) {
                    parent[w] = p;
                    break;  // neighbors are sorted, first hit is lowest
                }
        }
        return parent;
    };

    while (true) {
        int v = -1;
        for (int w = 0; w < n; ++w)
            if (f[w] >= 2 && (v == -1 || f[w] > f[v])) v = w;
        if (v == -1) break;

        int u = -1;
        for (int w = 0; w < n && u == -1; ++w)
            if (g.dist(v, w) == f[v]) u = w;

        std::vector<int> heard_set;
        for (int x = 0; x < n; ++x)
            if (f[x] >= 1 && g.dist(u, x) == f[x]) heard_set.push_back(x);

        auto parent = parents_from(u);
        VertexSet in_tree(n);
        in_tree.insert(u);
        std::vector<int> tree_deg(n, 0);
        for (int x : heard_set) {
            int w = x;
            while (w != u && !in_tree.contains(w)) {
                in_tree.insert(w);
                tree_deg[w] += 1;  // edge to parent
                tree_deg[parent[w]] += 1;
                w = parent[w];
            }
        }

        std::vector<int> even_class, odd_class;
        for (int w : in_tree.to_vector())
            (g.dist(u, w) % 2 == 0 ? even_class : odd_class).push_back(w);
        std::vector<int>& chosen =
            even_class.size() != odd_class.size()
                ? (even_class.size() > odd_class.size() ? even_class : odd_class)
                : (even_class.front() < odd_class.front() ? even_class : odd_class);

        for (int w : in_tree.to_vector())
            if (tree_deg[w] <= 1) f[w] = 0;
        for (int w : chosen) f[w] = 1;

        Broadcast rewritten(g, f);
        if (!is_boundary_independent_pairwise(rewritten))
            throw CheckError("extraction rewrite lost boundary independence on " + emit_graph6(g));
        steps.push_back(ExtractionStep{u, v, heard_set, in_tree.count(), chosen});
    }

    VertexSet result(n);
    for (int w = 0; w < n; ++w)
        if (f[w] == 1) result.insert(w);
    for (int a : result.to_vector())
        for (int b : result.to_vector())
            if (a < b && g.adjacent(a, b))
                throw CheckError("extraction result not independent on " + emit_graph6(g));
    return ExtractionResult{result, std::move(steps)};
}

}  // namespace bn
