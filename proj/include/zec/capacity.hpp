#pragma once

#include <optional>
#include <vector>

#include "zec/avc.hpp"
#include "zec/channel.hpp"
#include "zec/limits.hpp"
#include "zec/rational.hpp"
#include "zec/symmetrize.hpp"

namespace zec {

// Numeric envelope around a capacity value, in bits. When certified is true,
// |value_bits - C| <= certified_absolute_error holds up to floating-point
// evaluation of the bracket; beyond the certified paths the error field is a
// reported estimate only.
struct CapacityEstimate {
    double value_bits = 0.0;
    double certified_absolute_error = 0.0;
    long iterations = 0;
    bool certified = true;
};

// Per-iteration capacity bracket of the alternating-optimization scheme; the
// lower bound is non-decreasing and the true capacity lies in every bracket.
struct BaBracket {
    double lower;
    double upper;
};

// Capacity of a DMC in bits within tol, by alternating optimization with the
// standard per-iteration brackets: lower = log2 sum_x p(x) 2^{D(x)},
// upper = max_x D(x), D(x) the divergence of row x from the current output
// distribution. Stops when upper - lower <= tol.
CapacityEstimate dmc_capacity(const Channel &w, double tol,
                              const Limits &limits = default_limits(),
                              std::vector<BaBracket> *trace = nullptr);

// Exact mixture of AVC states: rows W_q(y|x) = sum_s q(s) [sigma_s(x) = y].
struct StateMixture {
    std::vector<Rational> q;

    static StateMixture validate(std::vector<Rational> q);
    static StateMixture uniform(int states);
};
Channel mix_channel(const ZeroOneAVC &avc, const StateMixture &q);

struct CavResult {
    CapacityEstimate estimate;
    bool symmetrizable = false;
    std::optional<Symmetrizer> symmetrizer;
    // Mixture achieving the reported value (empty when symmetrizable); grid
    // points are dyadic so coordinates are exact.
    std::vector<Rational> minimizer;
    // The enumeration and LP deciders disagreed on presence; the verified LP
    // answer was used.
    bool oracle_disagreement = false;
};

// Average-error capacity of a 0-1 AVC: exactly 0 when symmetrizable
// (enumeration decider cross-checked against the LP oracle), otherwise the
// minimum of C(W_q) over the state simplex. Up to three distinct states the
// minimization is certified within tol via convexity-based lower bounds;
// beyond that a projected subgradient descent reports an uncertified
// estimate.
CavResult cav(const ZeroOneAVC &avc, double tol, const Limits &limits = default_limits());

}  // namespace zec
