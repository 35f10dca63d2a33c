#pragma once

#include <string>
#include <vector>

#include "zec/channel.hpp"
#include "zec/graph.hpp"
#include "zec/rational.hpp"
#include "zec/verdict.hpp"

namespace zec {

// Certified two-sided bound on the Shannon capacity of a graph:
//   alpha(G^{box n_used})^{1/n_used}  <=  Theta(G)  <=  clique_cover_number(G).
// Both sides are held symbolically; every comparison is an exact integer
// power comparison. Decimal renderings are display-only.
struct BoundInterval {
    long alpha_best = 1;            // a with lower bound a^{1/n_used}
    int n_used = 1;                 // power achieving the best lower bound
    long cover_upper = 1;           // b, clique cover number of G
    int n_max = 1;                  // largest power computed
    std::vector<long> alpha_values; // alpha(G^{box k}) for k = 1..n_max

    // Exact point test: a^{1/n_used} == b, i.e. a == b^{n_used}.
    bool is_point() const;

    double theta_lower() const;
    double theta_upper() const;
    double c0_lower() const;  // log2 of the above, display-only
    double c0_upper() const;

    std::string theta_lower_display() const;
    std::string theta_upper_display() const;
    std::string c0_lower_display() const;
    std::string c0_upper_display() const;
};

// Computes alpha(G^{box k}) for k = 1..n_max, picks the exactly-best lower
// bound over all k (cross-multiplied integer powers, smallest k on ties),
// and pairs it with the clique cover upper bound.
BoundInterval theta_bounds(const Graph &g, int n_max, const Limits &limits = default_limits());

// Same interval for a channel through its confusability graph; read as
// C0 = log2 Theta.
BoundInterval c0_bounds(const Channel &w, int n_max, const Limits &limits = default_limits());

// Halts at the smallest n <= budget_n with alpha(G^{box n}) > mu^n (exact
// rational power comparison). A Halted verdict certifies Theta(G) > mu.
// alpha_trace, when given, receives alpha(G^{box n}) for every tested n so a
// verdict can be re-checked offline.
Verdict semidecide_theta_above(const Graph &g, const Rational &mu, long budget_n,
                               const Limits &limits = default_limits(),
                               std::vector<long> *alpha_trace = nullptr);

// Halts at the smallest n <= budget_n with alpha(G_W^{box n}) > 2^{lambda n},
// for rational lambda = p/q evaluated exactly as alpha^q > 2^{p n}. A Halted
// verdict certifies C0(W) > lambda.
Verdict semidecide_c0_above(const Channel &w, const Rational &lambda, long budget_n,
                            const Limits &limits = default_limits(),
                            std::vector<long> *alpha_trace = nullptr);

}  // namespace zec
