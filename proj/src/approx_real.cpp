#include "zec/approx_real.hpp"

#include <stdexcept>

namespace zec {

ApproxReal real_from_rational(const Rational &r) {
    return ApproxReal([r](long) { return r; }, Provenance::ExactRational);
}

namespace {

// Smallest l in [1, m] with halts_within(l), given halts_within(m) is true.
// Monotonicity makes binary search valid and keeps the cost logarithmic even
// for large precision indices.
long first_halt_step(const StepPredicate &p, long m) {
    long lo = 1, hi = m;
    while (lo < hi) {
        long mid = lo + (hi - lo) / 2;
        if (p.halts_within(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace

ApproxReal specker_real(StepPredicate p) {
    auto fn = [p = std::move(p)](long m) -> Rational {
        if (m > 0 && p.halts_within(m)) return Rational::pow2(-first_halt_step(p, m));
        return Rational::pow2(-m);
    };
    return ApproxReal(std::move(fn), Provenance::SpeckerSequence);
}

Verdict sign_positive(const ApproxReal &x, long budget) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    for (long k = 1; k <= budget; ++k) {
        if (x.approximant(k).exceeds_pow2_neg(k)) return Verdict::halted(k, budget);
    }
    return Verdict::budget_exhausted(budget);
}

Verdict sign_negative(const ApproxReal &x, long budget) {
    if (budget < 1) throw std::invalid_argument("budget must be at least 1");
    for (long k = 1; k <= budget; ++k) {
        // approximant(k) + 2^{-k} < 0  iff  -approximant(k) > 2^{-k}
        if ((-x.approximant(k)).exceeds_pow2_neg(k)) return Verdict::halted(k, budget);
    }
    return Verdict::budget_exhausted(budget);
}

}  // namespace zec
