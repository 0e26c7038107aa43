#include "bn/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bn/tree_analysis.hpp"

namespace bn {

namespace {

std::vector<std::pair<int, int>> mask_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) pairs.emplace_back(row, col);
    return pairs;
}

bool mask_connected(uint32_t mask, int n, const std::vector<std::pair<int, int>>& pairs) {
    uint32_t row[8] = {0};
    for (size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) {
            row[pairs[k].first] |= uint32_t(1) << pairs[k].second;
            row[pairs[k].second] |= uint32_t(1) << pairs[k].first;
        }
    uint32_t reached = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= row[v];
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == (uint32_t(1) << n) - 1;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw PreconditionError("exhaustive connected-graph scan is desk-scale only (n <= 7)");
    if (n == 1) return {Graph(1, {})};

    auto pairs = mask_pairs(n);
    int bits = static_cast<int>(pairs.size());

    // for each permutation: source bit feeding each image bit, so image
    // comparison can stop at the first differing bit (walked from the top)
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::pair<int, int>, int> pair_index;
    for (int k = 0; k < bits; ++k) pair_index[pairs[k]] = k;
    std::vector<std::vector<int>> source_bit;
    do {
        bool identity = true;
        for (int i = 0; i < n; ++i) identity &= perm[i] == i;
        if (identity) continue;
        std::vector<int> src(bits);
        for (int k = 0; k < bits; ++k) {
            int a = perm[pairs[k].first], b = perm[pairs[k].second];
            src[k] = pair_index[{std::min(a, b), std::max(a, b)}];
        }
        source_bit.push_back(std::move(src));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << bits); ++mask) {
        if (!mask_connected(mask, n, pairs)) continue;
        bool canonical = true;
        for (const auto& src : source_bit) {
            int cmp = 0;  // first differing bit from the top decides
            for (int t = bits - 1; t >= 0; --t) {
                int ib = (mask >> src[t]) & 1, mb = (mask >> t) & 1;
                if (ib != mb) {
                    cmp = ib - mb;
                    break;
                }
            }
            if (cmp < 0) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < bits; ++k)
            if ((mask >> k) & 1) edges.push_back(pairs[k]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

namespace {

std::string ahu_rooted(int v, int parent, const Graph& t) {
    std::vector<std::string> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.push_back(ahu_rooted(w, v, t));
    std::sort(children.begin(), children.end());
    std::string s = "(";
    for (const auto& c : children) s += c;
    s += ")";
    return s;
}

std::string tree_canonical(const Graph& t) {
    int n = t.order();
    if (n == 1) return "()";
    // peel leaves down to the one or two central vertices
    std::vector<int> degree(n), order;
    std::vector<bool> removed(n, false);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = t.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[w] && --degree[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        std::string s = ahu_rooted(c, -1, t);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 16) throw PreconditionError("tree enumeration is desk-scale only (n <= 16)");
    std::vector<Graph> current{Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> bucket;
        for (const Graph& t : current)
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.order());
                Graph grown(t.order() + 1, std::move(edges));
                std::string key = tree_canonical(grown);
                bucket.try_emplace(std::move(key), std::move(grown));
            }
        current.clear();
        for (auto& [key, tree] : bucket) current.push_back(std::move(tree));
    }
    return current;
}

std::vector<Graph> enumerate_caterpillars(int n) {
    std::vector<Graph> out;
    for (Graph& t : enumerate_trees(n))
        if (is_caterpillar(t)) out.push_back(std::move(t));
    return out;
}

long long oracle_state_space(const Graph& g) {
    long long total = 1;
    for (int v = 0; v < g.order(); ++v) {
        total *= g.eccentricity(v) + 1;
        if (total > (1LL << 50)) return 1LL << 50;
    }
    return total;
}

Graph random_connected_graph(int n, std::mt19937_64& rng, double p_min, double p_max,
                             long long max_states) {
    if (n < 2) throw PreconditionError("random graphs need n >= 2");
    std::uniform_real_distribution<double> pick_p(p_min, p_max);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (true) {
        double p = pick_p(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (!g.connected()) continue;
        if (max_states > 0 && oracle_state_space(g) > max_states) continue;
        return g;
    }
}

Graph random_caterpillar(int n, std::mt19937_64& rng) {
    if (n < 2) throw PreconditionError("random caterpillars need n >= 2");
    int spine = n;
    if (n >= 4) spine = std::uniform_int_distribution<int>(3, n)(rng);
    else if (n == 3) spine = 3;

    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(label[i], label[i + 1]);
    if (spine < n) {
        std::uniform_int_distribution<int> interior(1, spine - 2);
        for (int i = spine; i < n; ++i) edges.emplace_back(label[interior(rng)], label[i]);
    }
    return Graph(n, std::move(edges));
}

}  // namespace bn
