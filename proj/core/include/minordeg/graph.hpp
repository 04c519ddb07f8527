#pragma once

#include "minordeg/errors.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace minordeg {

using Edge = std::pair<int, int>; // labels, normalized u < v

// Simple labelled graph on vertices 1..n. Immutable once built: every
// operation in the library takes graphs by const reference and returns new
// ones. Adjacency is kept as 64-bit rows while n <= 64 (the hot paths:
// census sweeps, circumference, canonical forms) and as sorted neighbor
// lists above that (trees with 10^5 vertices must not allocate n^2 bits).
class LabelledGraph {
public:
    LabelledGraph() : n_(0) {}

    // `edges` uses labels in 1..n. Duplicates collapse; loops are an error.
    LabelledGraph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t m() const { return edge_count_; }
    bool small() const { return n_ <= 64; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return degrees_[check(v) - 1]; }
    const std::vector<int>& degrees() const { return degrees_; }

    // Neighbor labels of v, ascending.
    std::vector<int> neighbors(int v) const;

    // Bitset row for vertex label v (small graphs only), bit i = vertex i+1.
    std::uint64_t row(int v) const { return rows_[check(v) - 1]; }

    // All edges, normalized and sorted.
    std::vector<Edge> edges() const;

    bool operator==(const LabelledGraph& other) const;

private:
    int check(int v) const {
        require(v >= 1 && v <= n_, "LabelOutOfRange",
                "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
        return v;
    }

    int n_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> rows_;       // n <= 64
    std::vector<std::vector<int>> adj_;     // n > 64, 0-based neighbor indices
    std::vector<int> degrees_;
};

LabelledGraph make_graph(int n, const std::vector<Edge>& edges);

// (max degree, labels attaining it, ascending). Error on n = 0.
std::pair<int, std::vector<int>> max_degree(const LabelledGraph& g);

// Labels of degree-1 vertices, ascending.
std::vector<int> pendant_vertices(const LabelledGraph& g);

// Relabels g by `perm`, where perm[i] is the 0-based new index of the
// vertex with label i+1.
LabelledGraph apply_permutation(const LabelledGraph& g, const std::vector<int>& perm);

// Subgraph induced by `vertices` (labels); result vertices are relabelled
// 1..k following the ascending order of `vertices`.
LabelledGraph induced_subgraph(const LabelledGraph& g, std::vector<int> vertices);

} // namespace minordeg
