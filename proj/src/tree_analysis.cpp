#include "bn/tree_analysis.hpp"

#include <algorithm>
#include <set>

#include "bn/solvers.hpp"

namespace bn {

namespace {

void require_tree(const Graph& g, const char* who) {
    if (!g.is_tree()) throw PreconditionError(std::string(who) + " requires a tree");
}

}  // namespace

BranchLeafReduction branch_leaf_representation(const Graph& tree) {
    require_tree(tree, "branch-leaf reduction");
    if (tree.order() < 2)
        throw PreconditionError("branch-leaf reduction requires at least two vertices");
    int n = tree.order();
    std::vector<int> to_reduced(n, -1), to_original;
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) != 2) {
            to_reduced[v] = static_cast<int>(to_original.size());
            to_original.push_back(v);
        }

    std::set<std::pair<int, int>> reduced_edges;
    for (int s = 0; s < n; ++s) {
        if (to_reduced[s] < 0) continue;
        for (int first : tree.neighbors(s)) {
            int prev = s, cur = first;
            while (tree.degree(cur) == 2) {
                for (int w : tree.neighbors(cur))
                    if (w != prev) {
                        prev = cur;
                        cur = w;
                        break;
                    }
            }
            int a = to_reduced[s], b = to_reduced[cur];
            reduced_edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    std::vector<std::pair<int, int>> edges(reduced_edges.begin(), reduced_edges.end());
    return BranchLeafReduction{Graph(static_cast<int>(to_original.size()), std::move(edges)),
                               std::move(to_reduced), std::move(to_original)};
}

TreePartition classify(const Graph& tree) {
    require_tree(tree, "classification");
    if (tree.order() < 2) throw PreconditionError("classification requires at least two vertices");
    int n = tree.order();
    TreePartition p{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        if (tree.degree(v) >= 3)
            p.branches.insert(v);
        else if (tree.degree(v) == 2)
            p.trunks.insert(v);
        else
            p.leaves.insert(v);
    }
    if (!p.branches.empty()) {
        BranchLeafReduction bl = branch_leaf_representation(tree);
        for (int b : p.branches.to_vector()) {
            int adjacent_leaves = 0;
            for (int w : bl.reduced.neighbors(bl.to_reduced[b]))
                if (p.leaves.contains(bl.to_original[w])) ++adjacent_leaves;
            if (adjacent_leaves <= 1) p.eligible_branches.insert(b);
        }
    }
    return p;
}

int neilson_tree_bound(const Graph& tree) {
    TreePartition p = classify(tree);
    if (p.branches.empty())
        throw PreconditionError("bound needs at least one branch vertex (paths are exact already)");
    return tree.order() - p.branches.count() + p.eligible_branches.count();
}

std::optional<CaterpillarShape> caterpillar_shape_from(const Graph& tree, int bfs_start) {
    require_tree(tree, "caterpillar check");
    int n = tree.order();
    if (bfs_start < 0 || bfs_start >= n) throw PreconditionError("bfs start out of range");
    if (n == 1) return CaterpillarShape{{0}, {}, {}};

    auto farthest = [&](int from) {
        int best = from;
        for (int v = 0; v < n; ++v)
            if (tree.dist(from, v) > tree.dist(from, best)) best = v;
        return best;
    };
    int a = farthest(bfs_start);
    int b = farthest(a);

    // walk b -> a picking the lowest-index neighbor that moves closer to a
    std::vector<int> spine{b};
    while (spine.back() != a) {
        int cur = spine.back();
        for (int w : tree.neighbors(cur))
            if (tree.dist(a, w) == tree.dist(a, cur) - 1) {
                spine.push_back(w);
                break;
            }
    }

    std::vector<bool> on_spine(n, false);
    for (int v : spine) on_spine[v] = true;
    for (int v = 0; v < n; ++v) {
        if (on_spine[v]) continue;
        bool touches = false;
        for (int w : tree.neighbors(v)) touches |= on_spine[w];
        if (!touches) return std::nullopt;
    }

    CaterpillarShape shape;
    shape.spine = spine;
    int l1 = spine.front(), lm = spine.back();
    std::vector<int> middle;
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) <= 1 && v != l1 && v != lm) middle.push_back(v);
    std::sort(middle.begin(), middle.end(), [&](int x, int y) {
        if (tree.dist(l1, x) != tree.dist(l1, y)) return tree.dist(l1, x) < tree.dist(l1, y);
        return x < y;
    });
    shape.leaf_order.push_back(l1);
    shape.leaf_order.insert(shape.leaf_order.end(), middle.begin(), middle.end());
    shape.leaf_order.push_back(lm);
    shape.inner_leaves = middle;
    return shape;
}

std::optional<CaterpillarShape> is_caterpillar(const Graph& tree) {
    return caterpillar_shape_from(tree, 0);
}

Broadcast rebalance_inner_leaf(const Broadcast& f, const CaterpillarShape& shape, int leaf) {
    const Graph& g = f.graph();
    if (std::find(shape.inner_leaves.begin(), shape.inner_leaves.end(), leaf) ==
        shape.inner_leaves.end())
        throw PreconditionError("rebalance target must be an inner leaf");
    int k = f.strength(leaf);
    if (k < 3) throw PreconditionError("rebalance needs strength >= 3 at the inner leaf");
    if (f.strength(shape.leaf_order.front()) < 1 || f.strength(shape.leaf_order.back()) < 1)
        throw PreconditionError("rebalance expects broadcasting spine endpoints");
    if (!is_boundary_independent_pairwise(f))
        throw PreconditionError("rebalance requires a boundary-independent broadcast");

    std::vector<int> out = f.strengths();
    for (int v = 0; v < g.order(); ++v) {
        int d = g.dist(leaf, v);
        if (d > k) continue;
        if (k % 2 == 1)
            out[v] = (v == leaf) ? 1 : (d % 2 == 0 ? 1 : 0);
        else
            out[v] = (v == leaf) ? 2 : (d % 2 == 1 && d >= 3 ? 1 : 0);
    }

    Broadcast result(g, std::move(out));
    if (result.cost() != f.cost())
        throw CheckError("rebalance changed the cost on " + emit_graph6(g));
    if (!is_boundary_independent_pairwise(result) || !is_boundary_independent_definitional(result))
        throw CheckError("rebalance lost boundary independence on " + emit_graph6(g));
    if (result.strength_one().size() <= f.strength_one().size())
        throw CheckError("rebalance did not increase the strength-one count on " + emit_graph6(g));
    return result;
}

namespace {

// alpha of a disjoint union of paths, via ceil(len/2) per component, checked
// against the exact solver.
int path_forest_alpha(const Graph& forest) {
    int n = forest.order();
    if (forest.max_degree() > 2)
        throw CheckError("expected a forest of paths, found degree > 2");
    std::vector<bool> seen(n, false);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v]) continue;
        int size = 0;
        std::vector<int> stack{v};
        seen[v] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++size;
            for (int w : forest.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        total += (size + 1) / 2;
    }
    int solver = solve_alpha(forest).value;
    if (solver != total)
        throw CheckError("path-forest alpha mismatch: closed form " + std::to_string(total) +
                         ", solver " + std::to_string(solver));
    return total;
}

}  // namespace

int caterpillar_bound(const Graph& tree) {
    if (!is_caterpillar(tree)) throw PreconditionError("bound requires a caterpillar");
    if (tree.order() < 2) throw PreconditionError("bound requires at least two vertices");
    TreePartition p = classify(tree);
    int alpha_r = 0;
    if (!p.eligible_branches.empty())
        alpha_r = path_forest_alpha(induced_subgraph(tree, p.eligible_branches).graph);
    return tree.order() - p.branches.count() + alpha_r;
}

Corollary55Result corollary_55(const Graph& tree) {
    auto shape = is_caterpillar(tree);
    if (!shape) throw PreconditionError("closed form requires a caterpillar");
    if (tree.order() < 2) throw PreconditionError("closed form requires at least two vertices");
    TreePartition p = classify(tree);

    Corollary55Result r;
    std::vector<int> f(tree.order(), 0);
    if (p.trunks.empty()) {
        r.which = Cor55Case::trunkless;
        int alpha_r = 0;
        VertexSet chosen(tree.order());
        if (!p.eligible_branches.empty()) {
            InducedSubgraph sub = induced_subgraph(tree, p.eligible_branches);
            SetSolveResult mis = solve_alpha(sub.graph);
            alpha_r = mis.value;
            for (int v : mis.witness.to_vector()) chosen.insert(sub.to_parent[v]);
        }
        r.value = p.leaves.count() + alpha_r;
        for (int l : p.leaves.to_vector()) {
            bool next_to_chosen = false;
            for (int w : tree.neighbors(l)) next_to_chosen |= chosen.contains(w);
            f[l] = next_to_chosen ? 2 : 1;
        }
    } else {
        bool adjacent_trunks = false;
        for (auto [u, v] : tree.edges())
            if (p.trunks.contains(u) && p.trunks.contains(v)) adjacent_trunks = true;
        bool degree_three = false;
        for (int v = 0; v < tree.order(); ++v)
            if (tree.degree(v) == 3) degree_three = true;
        if (adjacent_trunks || degree_three) return r;  // not applicable
        r.which = Cor55Case::isolated_trunks;
        r.value = p.leaves.count() + p.trunks.count();
        for (int v : p.leaves.to_vector()) f[v] = 1;
        for (int v : p.trunks.to_vector()) f[v] = 1;
    }

    Broadcast witness(tree, f);
    if (witness.cost() != r.value || !is_boundary_independent_pairwise(witness) ||
        !is_boundary_independent_definitional(witness)) {
        r.status = Cor55Status::witness_rejected;
        r.witness = std::move(f);
        return r;
    }
    r.status = Cor55Status::ok;
    r.witness = std::move(f);
    return r;
}

std::vector<Question61Record> search_question_61(const std::vector<Graph>& trees) {
    std::vector<Question61Record> out;
    for (const Graph& t : trees) {
        Question61Record rec;
        rec.graph6 = emit_graph6(t);
        rec.n = t.order();
        if (!t.is_tree() || t.order() < 2) {
            rec.skipped = true;
            rec.skip_reason = "not a tree on >= 2 vertices";
            out.push_back(std::move(rec));
            continue;
        }
        TreePartition p = classify(t);
        if (p.branches.empty()) {
            rec.skipped = true;
            rec.skip_reason = "no branch vertex";
            out.push_back(std::move(rec));
            continue;
        }
        if (t.order() > 10) {
            rec.skipped = true;
            rec.skip_reason = "beyond oracle cap";
            out.push_back(std::move(rec));
            continue;
        }
        rec.branch_count = p.branches.count();
        rec.eligible_count = p.eligible_branches.count();
        int alpha_r = 0;
        if (!p.eligible_branches.empty())
            alpha_r = solve_alpha(induced_subgraph(t, p.eligible_branches).graph).value;
        rec.bound = t.order() - rec.branch_count + alpha_r;
        rec.alpha_bn = brute_force_alpha_bn(t);
        rec.violation = rec.alpha_bn > rec.bound;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace bn
