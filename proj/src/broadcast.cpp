#include "bn/broadcast.hpp"

#include <nlohmann/json.hpp>

namespace bn {

Broadcast::Broadcast(const Graph& g, std::vector<int> strengths) : g_(&g), f_(std::move(strengths)) {
    if (!g.connected()) throw PreconditionError("broadcast requires a connected graph");
    if (g.order() < 2) throw PreconditionError("broadcast requires at least two vertices");
    if (static_cast<int>(f_.size()) != g.order())
        throw PreconditionError("strength vector length " + std::to_string(f_.size()) +
                                " does not match order " + std::to_string(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        if (f_[v] < 0)
            throw PreconditionError("negative strength at vertex " + std::to_string(v));
        if (f_[v] > g.eccentricity(v))
            throw PreconditionError("strength " + std::to_string(f_[v]) + " at vertex " +
                                    std::to_string(v) + " exceeds eccentricity " +
                                    std::to_string(g.eccentricity(v)));
    }
}

int Broadcast::cost() const {
    int c = 0;
    for (int s : f_) c += s;
    return c;
}

std::vector<int> Broadcast::broadcasters() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(f_.size()); ++v)
        if (f_[v] >= 1) out.push_back(v);
    return out;
}

std::vector<int> Broadcast::strength_one() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(f_.size()); ++v)
        if (f_[v] == 1) out.push_back(v);
    return out;
}

std::vector<int> Broadcast::strength_over_one() const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(f_.size()); ++v)
        if (f_[v] >= 2) out.push_back(v);
    return out;
}

BroadcastAnalysis analyze(const Broadcast& f) {
    const Graph& g = f.graph();
    int n = g.order();
    BroadcastAnalysis a;
    a.broadcasters = VertexSet(n);
    a.hearers.assign(n, VertexSet(n));
    a.boundary.assign(n, VertexSet(n));
    a.private_hearers.assign(n, VertexSet(n));
    a.private_boundary.assign(n, VertexSet(n));
    a.sources.assign(n, VertexSet(n));
    a.undominated = VertexSet(n);

    for (int v = 0; v < n; ++v) {
        if (f.strength(v) < 1) continue;
        a.broadcasters.insert(v);
        const auto& d = g.dist_row(v);
        for (int u = 0; u < n; ++u) {
            if (d[u] <= f.strength(v)) {
                a.hearers[v].insert(u);
                a.sources[u].insert(v);
                if (d[u] == f.strength(v)) a.boundary[v].insert(u);
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        if (a.sources[u].count() == 1) {
            int v = a.sources[u].to_vector()[0];
            a.private_hearers[v].insert(u);
            if (a.boundary[v].contains(u)) a.private_boundary[v].insert(u);
        }
        if (a.sources[u].empty()) a.undominated.insert(u);
    }

    for (auto [u, v] : g.edges()) {
        VertexSet cover(n);
        for (int w : a.broadcasters.to_vector()) {
            bool u_hears = a.hearers[w].contains(u);
            bool v_hears = a.hearers[w].contains(v);
            bool u_inside = u_hears && !a.boundary[w].contains(u);
            bool v_inside = v_hears && !a.boundary[w].contains(v);
            if (u_hears && v_hears && (u_inside || v_inside)) cover.insert(w);
        }
        a.edge_cover.push_back(cover);
        if (cover.empty()) a.uncovered_edges.emplace_back(u, v);
    }
    return a;
}

std::vector<std::pair<int, int>> overdomination(const Broadcast& f, int u) {
    const Graph& g = f.graph();
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.order(); ++v) {
        int slack = f.strength(v) - g.dist(u, v);
        if (f.strength(v) >= 1 && slack >= 1) out.emplace_back(v, slack);
    }
    return out;
}

bool is_dominating(const Broadcast& f) {
    return analyze(f).undominated.empty();
}

bool is_hearing_independent(const Broadcast& f) {
    auto bs = f.broadcasters();
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j) {
            int d = f.graph().dist(bs[i], bs[j]);
            if (f.strength(bs[i]) >= d || f.strength(bs[j]) >= d) return false;
        }
    return true;
}

bool is_boundary_independent_definitional(const Broadcast& f) {
    BroadcastAnalysis a = analyze(f);
    for (int v : a.broadcasters.to_vector()) {
        VertexSet inside = a.hearers[v].minus(a.boundary[v]);
        if (!inside.is_subset_of(a.private_hearers[v])) return false;
    }
    return true;
}

bool is_boundary_independent_pairwise(const Broadcast& f) {
    auto bs = f.broadcasters();
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j)
            if (f.strength(bs[i]) + f.strength(bs[j]) > f.graph().dist(bs[i], bs[j])) return false;
    return true;
}

std::string broadcast_to_json(const Broadcast& f) {
    nlohmann::json j;
    j["n"] = f.graph().order();
    j["strengths"] = f.strengths();
    return j.dump();
}

Broadcast broadcast_from_json(const Graph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("broadcast record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("strengths"))
        throw ParseError("broadcast record needs fields 'n' and 'strengths'");
    if (!j["n"].is_number_integer() || !j["strengths"].is_array())
        throw ParseError("broadcast record: 'n' must be an integer, 'strengths' an array");
    int n = j["n"].get<int>();
    if (n != g.order())
        throw ParseError("broadcast record is for n=" + std::to_string(n) + ", graph has n=" +
                         std::to_string(g.order()));
    std::vector<int> f;
    for (const auto& x : j["strengths"]) {
        if (!x.is_number_integer()) throw ParseError("broadcast record: non-integer strength");
        f.push_back(x.get<int>());
    }
    return Broadcast(g, std::move(f));
}

}  // namespace bn
