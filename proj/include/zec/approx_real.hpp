#pragma once

#include <functional>
#include <utility>

#include "zec/rational.hpp"
#include "zec/verdict.hpp"

namespace zec {

enum class Provenance { ExactRational, SpeckerSequence, Derived };

// A computable real presented as an effective approximation sequence: a total
// deterministic function n -> Rational with |x - approximant(n)| <= 2^{-n}.
// The accuracy modulus is normalized to the identity, so the precision index
// doubles as the error exponent. Instances are immutable and safe to share
// across threads.
class ApproxReal {
public:
    using Approximant = std::function<Rational(long)>;

    ApproxReal(Approximant approximant, Provenance provenance)
        : approximant_(std::move(approximant)), provenance_(provenance) {}

    Rational approximant(long n) const {
        if (n < 0) throw std::domain_error("precision index must be non-negative");
        return approximant_(n);
    }

    Provenance provenance() const { return provenance_; }

private:
    Approximant approximant_;
    Provenance provenance_;
};

// Monotone halting pattern of an abstract machine: once true, true forever.
// Callers supply any such predicate; only the halting pattern matters.
struct StepPredicate {
    std::function<bool(long)> halts_within;

    static StepPredicate halts_at(long step) {
        return StepPredicate{[step](long m) { return m >= step; }};
    }
    static StepPredicate never() {
        return StepPredicate{[](long) { return false; }};
    }
};

// Constant sequence: every approximant equals r.
ApproxReal real_from_rational(const Rational &r);

// The adversarial staircase: approximant(m) = 1/2^l if the predicate first
// halts at step l <= m, and 1/2^m while it has not halted. Represents 1/2^l
// when the predicate halts at l, and 0 when it never halts -- a value no sign
// decider can ever certify.
ApproxReal specker_real(StepPredicate p);

// Semi-decider for "> 0": halts at the smallest k in [1, budget] with
// approximant(k) - 2^{-k} > 0. A Halted verdict certifies the represented
// real is strictly positive; exhaustion certifies nothing.
Verdict sign_positive(const ApproxReal &x, long budget);

// Mirror image for "< 0": halts when approximant(k) + 2^{-k} < 0.
Verdict sign_negative(const ApproxReal &x, long budget);

}  // namespace zec
