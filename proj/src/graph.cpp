#include "bn/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace bn {

int VertexSet::count() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~other.bits_[i]) return false;
    return true;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_[i];
    return r;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_[i];
    return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & ~other.bits_[i];
    return r;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

VertexSet VertexSet::of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw PreconditionError("graph needs at least one vertex");
    std::vector<std::pair<int, int>> cleaned;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        cleaned.emplace_back(u, v);
    }
    std::sort(cleaned.begin(), cleaned.end());
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
    edges_ = std::move(cleaned);

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    dist_.assign(n_, std::vector<int>(n_, kUnreachable));
    for (int s = 0; s < n_; ++s) {
        auto& d = dist_[s];
        d[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : adj_[u])
                if (d[w] == kUnreachable) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
    }

    connected_ = true;
    for (int v = 0; v < n_; ++v)
        if (dist_[0][v] == kUnreachable) connected_ = false;

    ecc_.assign(n_, kUnreachable);
    if (connected_) {
        for (int v = 0; v < n_; ++v) ecc_[v] = *std::max_element(dist_[v].begin(), dist_[v].end());
    }
}

bool Graph::adjacent(int u, int v) const {
    return u != v && dist_[u][v] == 1;
}

int Graph::eccentricity(int v) const {
    if (!connected_) throw PreconditionError("eccentricity undefined on a disconnected graph");
    return ecc_[v];
}

int Graph::diameter() const {
    if (!connected_) throw PreconditionError("diameter undefined on a disconnected graph");
    return *std::max_element(ecc_.begin(), ecc_.end());
}

int Graph::radius() const {
    if (!connected_) throw PreconditionError("radius undefined on a disconnected graph");
    return *std::min_element(ecc_.begin(), ecc_.end());
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Metrics metrics(const Graph& g) {
    return Metrics{g.order(),
                   g.size(),
                   g.connected(),
                   g.is_tree(),
                   g.connected() ? g.diameter() : Graph::kUnreachable,
                   g.min_degree(),
                   g.max_degree()};
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long declared_n = 0;
    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    bool saw_content = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;

        if (a == "n") {
            if (saw_content || have_header)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must be the first content line");
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'n <count>'");
            try {
                declared_n = std::stoll(b);
            } catch (...) {
                throw ParseError("line " + std::to_string(lineno) + ": bad vertex count '" + b + "'");
            }
            if (declared_n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": vertex count must be >= 1");
            have_header = true;
            saw_content = true;
            continue;
        }

        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        long long u, v;
        try {
            u = std::stoll(a);
            v = std::stoll(b);
        } catch (...) {
            throw ParseError("line " + std::to_string(lineno) + ": non-numeric endpoint");
        }
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex index");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop rejected");
        if (have_header && (u >= declared_n || v >= declared_n))
            throw ParseError("line " + std::to_string(lineno) + ": index beyond declared count");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_index = std::max({max_index, static_cast<int>(u), static_cast<int>(v)});
        saw_content = true;
    }

    int n = have_header ? static_cast<int>(declared_n) : max_index + 1;
    if (n < 1) throw ParseError("no vertices: empty edge list without a header");
    return Graph(n, std::move(edges));
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph6(const std::string& input) {
    std::string line = input;
    if (line.starts_with(">>graph6<<")) line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte out of range: " + std::to_string(int(c)));
    if (line[0] == 126) throw ParseError("graph6: long-form vertex counts are beyond desk scale");

    int n = line[0] - 63;
    if (n < 1) throw ParseError("graph6: vertex count must be >= 1");
    int pairs = n * (n - 1) / 2;
    int chars = (pairs + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + chars)
        throw ParseError("graph6: expected " + std::to_string(1 + chars) + " bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(line.size()));

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            int value = line[1 + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
            ++bit;
        }
    for (int k = pairs; k < chars * 6; ++k) {
        int value = line[1 + k / 6] - 63;
        if ((value >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    int n = g.order();
    if (n >= 63) throw PreconditionError("graph6 emission for n >= 63 is beyond desk scale");
    int pairs = n * (n - 1) / 2;
    std::string out(1 + (pairs + 5) / 6, char(63));
    out[0] = char(63 + n);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (g.adjacent(row, col)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
            ++bit;
        }
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    auto members = keep.to_vector();
    if (members.empty()) throw PreconditionError("induced subgraph on an empty vertex set");
    std::vector<int> to_sub(g.order(), -1);
    for (size_t i = 0; i < members.size(); ++i) to_sub[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (to_sub[u] >= 0 && to_sub[v] >= 0) edges.emplace_back(to_sub[u], to_sub[v]);
    return InducedSubgraph{Graph(static_cast<int>(members.size()), std::move(edges)), std::move(to_sub),
                           std::move(members)};
}

}  // namespace bn
