#pragma once

#include <optional>
#include <vector>

#include "zec/avc.hpp"
#include "zec/rational.hpp"

namespace zec {

// Witness channel U : X -> S for the symmetrizability identity
//   sum_s W(y|x',s) U(s|x) = sum_s W(y|x,s) U(s|x')   for all x, x', y.
// Rows are exact and stochastic; every returned witness re-verifies the
// identity before leaving the deciding routine.
struct Symmetrizer {
    std::vector<std::vector<Rational>> rows;  // |X| x |S|
};

// Exact re-check of the identity and row-stochasticity.
bool satisfies_symmetry(const ZeroOneAVC &avc, const Symmetrizer &u);

// Enumerative decider: scans uniform candidates U(s|x) = 1/nu on supports
// I(x) of a common size nu <= min pairwise overlap of the reachable-output
// sets, requiring the states in I(x) to hit nu distinct outputs from x.
// First satisfying assignment in lexicographic order wins. Guarded by
// Limits::symmetrizer_enum_cap.
std::optional<Symmetrizer> is_symmetrizable_enum(const ZeroOneAVC &avc,
                                                 const Limits &limits = default_limits());

// Independent oracle: the identity is linear in U, so symmetrizability is
// exact rational feasibility of U(s|x) >= 0, sum_s U(s|x) = 1 plus the
// identity's equalities. Duplicate states are collapsed to their first
// occurrence before solving (redundant columns) and reported at full width.
std::optional<Symmetrizer> is_symmetrizable_lp(const ZeroOneAVC &avc);

}  // namespace zec
