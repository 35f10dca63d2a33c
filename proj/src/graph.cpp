#include "zec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace zec {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits &b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

bool test_bit(const Bits &b, int i) { return (b[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
void set_bit(Bits &b, int i) { b[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }

}  // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (n_ < 1) throw InvalidInput("graph needs at least one vertex");
    for (auto &[u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    blocks_ = (n_ + 63) / 64;
    adj_.assign(static_cast<std::size_t>(n_) * blocks_, 0);
    for (auto [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u) * blocks_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        adj_[static_cast<std::size_t>(v) * blocks_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    }
}

Graph Graph::edgeless(int vertex_count) { return Graph(vertex_count, {}); }

Graph Graph::complete(int vertex_count) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) e.emplace_back(u, v);
    return Graph(vertex_count, std::move(e));
}

Graph Graph::cycle(int vertex_count) {
    if (vertex_count < 3) throw InvalidInput("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < vertex_count; ++u) e.emplace_back(u, (u + 1) % vertex_count);
    return Graph(vertex_count, std::move(e));
}

int Graph::degree(int u) const {
    const std::uint64_t *row = adj_row(u);
    int d = 0;
    for (int b = 0; b < blocks_; ++b) d += std::popcount(row[b]);
    return d;
}

Graph strong_product(const Graph &g, const Graph &h, const Limits &limits) {
    const std::size_t nv = static_cast<std::size_t>(g.vertex_count()) * h.vertex_count();
    if (nv > limits.product_cap) throw ProductTooLarge(nv, limits.product_cap);

    const int nh = h.vertex_count();
    const int n = static_cast<int>(nv);
    std::vector<std::pair<int, int>> edges;
    for (int p = 0; p < n; ++p) {
        const int pg = p / nh, ph = p % nh;
        for (int q = p + 1; q < n; ++q) {
            const int qg = q / nh, qh = q % nh;
            const bool g_ok = pg == qg || g.has_edge(pg, qg);
            const bool h_ok = ph == qh || h.has_edge(ph, qh);
            if (g_ok && h_ok) edges.emplace_back(p, q);
        }
    }
    return Graph(n, std::move(edges));
}

Graph strong_power(const Graph &g, int n, const Limits &limits) {
    if (n < 1) throw InvalidInput("strong power exponent must be >= 1");
    Graph acc = g;
    for (int k = 2; k <= n; ++k) acc = strong_product(acc, g, limits);
    return acc;
}

namespace {

// Deterministic exact MIS search state on bitset candidate sets.
class MisSolver {
public:
    explicit MisSolver(const Graph &g) : g_(g), blocks_(g.blocks()) {}

    std::vector<int> solve() {
        Bits cand(blocks_, 0);
        for (int v = 0; v < g_.vertex_count(); ++v) set_bit(cand, v);
        // mask off bits past n
        if (g_.vertex_count() % 64 != 0)
            cand[blocks_ - 1] &= (~std::uint64_t(0)) >> (64 - g_.vertex_count() % 64);
        best_.clear();
        current_.clear();
        expand(cand);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy clique cover of the candidate set; the number of cliques bounds
    // any independent set inside it.
    int cover_bound(const Bits &cand) const {
        std::vector<Bits> cliques;
        std::vector<const std::uint64_t *> rows;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!test_bit(cand, v)) continue;
            const std::uint64_t *adj = g_.adj_row(v);
            bool placed = false;
            for (std::size_t c = 0; c < cliques.size(); ++c) {
                // v joins clique c iff adjacent to all current members:
                // members subset of adj(v).
                bool ok = true;
                for (int b = 0; b < blocks_; ++b) {
                    if (cliques[c][b] & ~adj[b]) { ok = false; break; }
                }
                if (ok) {
                    set_bit(cliques[c], v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(blocks_, 0);
                set_bit(cliques.back(), v);
            }
        }
        return static_cast<int>(cliques.size());
    }

    int pick_branch_vertex(const Bits &cand) const {
        int best_v = -1, best_deg = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (!test_bit(cand, v)) continue;
            const std::uint64_t *adj = g_.adj_row(v);
            int d = 0;
            for (int b = 0; b < blocks_; ++b) d += std::popcount(adj[b] & cand[b]);
            if (d > best_deg) { best_deg = d; best_v = v; }
        }
        return best_v;
    }

    void expand(const Bits &cand) {
        const int remaining = popcount(cand);
        if (remaining == 0) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        if (current_.size() + static_cast<std::size_t>(remaining) <= best_.size()) return;
        if (current_.size() + static_cast<std::size_t>(cover_bound(cand)) <= best_.size()) return;

        const int v = pick_branch_vertex(cand);
        const std::uint64_t *adj = g_.adj_row(v);

        // Include v.
        Bits with(blocks_);
        for (int b = 0; b < blocks_; ++b) with[b] = cand[b] & ~adj[b];
        with[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
        current_.push_back(v);
        expand(with);
        current_.pop_back();

        // Exclude v.
        Bits without = cand;
        without[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t(1) << (v & 63));
        expand(without);
    }

    const Graph &g_;
    int blocks_;
    std::vector<int> best_;
    std::vector<int> current_;
};

}  // namespace

std::vector<int> max_independent_set(const Graph &g, const Limits &limits) {
    if (static_cast<std::size_t>(g.vertex_count()) > limits.product_cap)
        throw ProductTooLarge(g.vertex_count(), limits.product_cap);
    return MisSolver(g).solve();
}

long independence_number(const Graph &g, const Limits &limits) {
    return static_cast<long>(max_independent_set(g, limits).size());
}

namespace {

// Exact chromatic number by sequential branch-and-bound coloring with the
// usual symmetry break: a vertex may open at most one new color.
class ColoringSolver {
public:
    explicit ColoringSolver(const Graph &g) : g_(g), n_(g.vertex_count()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            const int da = g_.degree(a), db = g_.degree(b);
            return da != db ? da > db : a < b;
        });
        color_.assign(n_, -1);
    }

    int solve() {
        best_ = greedy_bound();
        if (best_ > clique_lower_bound()) descend(0, 0);
        return best_;
    }

private:
    int greedy_bound() {
        std::vector<int> col(n_, -1);
        int used = 0;
        for (int v : order_) {
            std::uint64_t taken = 0;  // n <= 64 fits one word
            const std::uint64_t *adj = g_.adj_row(v);
            for (int u = 0; u < n_; ++u)
                if (col[u] >= 0 && ((adj[u >> 6] >> (u & 63)) & 1u)) taken |= std::uint64_t(1) << col[u];
            int c = std::countr_one(taken);
            col[v] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

    int clique_lower_bound() const {
        // Greedy clique grown along the static order.
        std::vector<int> clique;
        for (int v : order_) {
            bool ok = true;
            for (int u : clique)
                if (!g_.has_edge(u, v)) { ok = false; break; }
            if (ok) clique.push_back(v);
        }
        return static_cast<int>(clique.size());
    }

    void descend(int idx, int used) {
        if (used >= best_) return;
        if (idx == n_) {
            best_ = used;
            return;
        }
        const int v = order_[idx];
        const std::uint64_t *adj = g_.adj_row(v);
        std::uint64_t taken = 0;
        for (int u = 0; u < n_; ++u)
            if (color_[u] >= 0 && ((adj[u >> 6] >> (u & 63)) & 1u)) taken |= std::uint64_t(1) << color_[u];
        const int limit = std::min(used + 1, best_ - 1);
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1u) continue;
            color_[v] = c;
            descend(idx + 1, std::max(used, c + 1));
            color_[v] = -1;
        }
    }

    const Graph &g_;
    int n_;
    std::vector<int> order_;
    std::vector<int> color_;
    int best_ = 0;
};

Graph complement(const Graph &g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) e.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(e));
}

}  // namespace

int clique_cover_number(const Graph &g, const Limits &limits) {
    if (g.vertex_count() > limits.clique_cover_cap)
        throw GraphTooLargeForExactCover(g.vertex_count(), limits.clique_cover_cap);
    return ColoringSolver(complement(g)).solve();
}

bool is_complete(const Graph &g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace zec
