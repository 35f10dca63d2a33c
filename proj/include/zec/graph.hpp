#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zec/errors.hpp"
#include "zec/limits.hpp"

namespace zec {

// Simple undirected graph: no self-loops, deduplicated edge set, vertices
// 0..n-1. Immutable after construction. Adjacency is kept as packed bitset
// rows so the exact solvers can run on word-parallel set operations.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    static Graph edgeless(int vertex_count);
    static Graph complete(int vertex_count);
    static Graph cycle(int vertex_count);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>> &edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        return u != v && (adj_row(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    int degree(int u) const;

    int blocks() const { return blocks_; }
    const std::uint64_t *adj_row(int u) const { return &adj_[static_cast<std::size_t>(u) * blocks_]; }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    int blocks_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

// Strong product: (g,h) ~ (g',h') iff both coordinates are equal or adjacent
// (and the pairs differ). Vertex (g,h) gets index g*|V(H)| + h.
Graph strong_product(const Graph &g, const Graph &h, const Limits &limits = default_limits());

// n-fold strong power, left-associated, so the word (x_1..x_n) has index
// sum x_t * |V|^{n-t} (big-endian base-|V| digits).
Graph strong_power(const Graph &g, int n, const Limits &limits = default_limits());

// Exact maximum independent set by deterministic branch and bound: branch on
// the highest-degree candidate (index tiebreak), prune with a greedy clique
// cover bound. Returns the sorted witness set.
std::vector<int> max_independent_set(const Graph &g, const Limits &limits = default_limits());

// alpha(G), the size of the set above.
long independence_number(const Graph &g, const Limits &limits = default_limits());

// Exact minimum clique cover = chromatic number of the complement, by branch
// and bound coloring. Guarded by Limits::clique_cover_cap.
int clique_cover_number(const Graph &g, const Limits &limits = default_limits());

bool is_complete(const Graph &g);

}  // namespace zec
