#pragma once

#include <vector>

#include "zec/approx_real.hpp"
#include "zec/graph.hpp"
#include "zec/limits.hpp"
#include "zec/rational.hpp"

namespace zec {

// Discrete memoryless channel over exact rationals: a row-stochastic
// |X| x |Y| matrix, every entry in [0,1] and every row summing to exactly 1.
// Construction goes through validate(), which enforces the invariants.
class Channel {
public:
    static Channel validate(std::vector<std::vector<Rational>> rows);

    int input_size() const { return static_cast<int>(rows_.size()); }
    int output_size() const { return static_cast<int>(rows_[0].size()); }
    const Rational &entry(int x, int y) const { return rows_[x][y]; }
    const std::vector<Rational> &row(int x) const { return rows_[x]; }
    const std::vector<std::vector<Rational>> &rows() const { return rows_; }

    // Output letters y with W(y|x) > 0, ascending.
    std::vector<int> support(int x) const;

    friend bool operator==(const Channel &a, const Channel &b) { return a.rows_ == b.rows_; }

private:
    explicit Channel(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {}
    std::vector<std::vector<Rational>> rows_;
};

// A set of pairwise orthogonal input words of a common block length: no
// output word is reachable from two distinct codewords.
struct ZeroErrorCode {
    int block_length = 1;
    std::vector<std::vector<int>> codewords;

    std::size_t size() const { return codewords.size(); }
};

// Confusability graph: vertices are input letters, an edge joins two letters
// whose row supports intersect. Exact positivity tests make this total.
Graph confusability_graph(const Channel &w);

// True iff the confusability graph is complete, i.e. no two letters are ever
// distinguishable and the zero-error capacity is 0.
bool is_useless(const Channel &w);

// Maximum zero-error code of block length n, realized as a maximum
// independent set of the n-th strong power of the confusability graph.
// Deterministic: fixed vertex order in the underlying search.
ZeroErrorCode max_zero_error_code(const Channel &w, int n, const Limits &limits = default_limits());

// Channel whose entries are computable reals. The entry contract
// approximant(k) in [-2^{-k}, 1 + 2^{-k}] is spot-checked on the first few
// precision levels at construction; it cannot be decided in general.
class ApproxChannel {
public:
    ApproxChannel(std::vector<std::vector<ApproxReal>> rows);
    static ApproxChannel from_exact(const Channel &w);

    int input_size() const { return static_cast<int>(rows_.size()); }
    int output_size() const { return static_cast<int>(rows_[0].size()); }
    const ApproxReal &entry(int x, int y) const { return rows_[x][y]; }

    // The pairwise row correlation d(x,x') = sum_y W(y|x) W(y|x') as a
    // computable real. Factor approximants are evaluated at precision
    // n + ceil(log2(2|Y|)) + 1 so the summed products meet the 2^{-n}
    // accuracy contract.
    ApproxReal row_correlation(int x, int x_prime) const;

private:
    std::vector<std::vector<ApproxReal>> rows_;
};

// Budgeted edge revelation: G_k contains the edge {x,x'} iff the positivity
// decider on d(x,x') halts within k steps. The result is a nested sequence
// G_1 subseteq ... subseteq G_budget; for exact-rational channels it
// stabilizes to the confusability graph, while an entry whose positivity is
// never certified keeps its edges hidden at every budget.
std::vector<Graph> confusability_graph_staged(const ApproxChannel &w, long budget);

}  // namespace zec
