#include "minordeg/graph.hpp"

#include <algorithm>
#include <set>

namespace minordeg {

LabelledGraph::LabelledGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    require(n >= 0, "BadVertexCount", "negative vertex count");
    degrees_.assign(n, 0);
    std::set<Edge> normalized;
    for (auto [u, v] : edges) {
        require(u >= 1 && u <= n && v >= 1 && v <= n, "LabelOutOfRange",
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on n=" + std::to_string(n));
        require(u != v, "LoopEdge", "loop at " + std::to_string(u));
        if (u > v) std::swap(u, v);
        normalized.insert({u, v});
    }
    edge_count_ = normalized.size();
    if (small()) {
        rows_.assign(n, 0);
        for (auto [u, v] : normalized) {
            rows_[u - 1] |= 1ULL << (v - 1);
            rows_[v - 1] |= 1ULL << (u - 1);
        }
        for (int i = 0; i < n; ++i) degrees_[i] = __builtin_popcountll(rows_[i]);
    } else {
        adj_.assign(n, {});
        for (auto [u, v] : normalized) {
            adj_[u - 1].push_back(v - 1);
            adj_[v - 1].push_back(u - 1);
        }
        for (int i = 0; i < n; ++i) {
            std::sort(adj_[i].begin(), adj_[i].end());
            degrees_[i] = static_cast<int>(adj_[i].size());
        }
    }
}

bool LabelledGraph::has_edge(int u, int v) const {
    check(u);
    check(v);
    if (u == v) return false;
    if (small()) return (rows_[u - 1] >> (v - 1)) & 1ULL;
    const auto& a = adj_[u - 1];
    return std::binary_search(a.begin(), a.end(), v - 1);
}

std::vector<int> LabelledGraph::neighbors(int v) const {
    check(v);
    std::vector<int> out;
    out.reserve(degrees_[v - 1]);
    if (small()) {
        std::uint64_t r = rows_[v - 1];
        while (r) {
            int i = __builtin_ctzll(r);
            out.push_back(i + 1);
            r &= r - 1;
        }
    } else {
        for (int w : adj_[v - 1]) out.push_back(w + 1);
    }
    return out;
}

std::vector<Edge> LabelledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 1; u <= n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.push_back({u, v});
    return out;
}

bool LabelledGraph::operator==(const LabelledGraph& other) const {
    return n_ == other.n_ && edges() == other.edges();
}

LabelledGraph make_graph(int n, const std::vector<Edge>& edges) {
    return LabelledGraph(n, edges);
}

std::pair<int, std::vector<int>> max_degree(const LabelledGraph& g) {
    require(g.n() >= 1, "EmptyGraph", "max_degree of empty graph");
    int best = 0;
    for (int v = 1; v <= g.n(); ++v) best = std::max(best, g.degree(v));
    std::vector<int> argmax;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == best) argmax.push_back(v);
    return {best, argmax};
}

std::vector<int> pendant_vertices(const LabelledGraph& g) {
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

LabelledGraph apply_permutation(const LabelledGraph& g, const std::vector<int>& perm) {
    require(static_cast<int>(perm.size()) == g.n(), "BadPermutation", "size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (auto [u, v] : g.edges()) edges.push_back({perm[u - 1] + 1, perm[v - 1] + 1});
    return LabelledGraph(g.n(), edges);
}

LabelledGraph induced_subgraph(const LabelledGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> index(g.n() + 1, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int u : vertices)
        for (int v : g.neighbors(u))
            if (u < v && index[v] >= 0) edges.push_back({index[u] + 1, index[v] + 1});
    return LabelledGraph(static_cast<int>(vertices.size()), edges);
}

} // namespace minordeg
