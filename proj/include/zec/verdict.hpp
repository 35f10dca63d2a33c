#pragma once

#include <cassert>
#include <string>

namespace zec {

// Budgeted outcome of a semi-decision procedure. Exhaustion is a first-class
// result, not an error: the procedure is free to halt later with a larger
// budget, and never contradicts an earlier Halted.
class Verdict {
public:
    static Verdict halted(long steps_used, long budget) {
        assert(steps_used >= 1 && steps_used <= budget);
        return Verdict(true, steps_used, budget);
    }
    static Verdict budget_exhausted(long budget) { return Verdict(false, 0, budget); }

    bool halted() const { return halted_; }
    long steps_used() const {
        assert(halted_);
        return steps_used_;
    }
    long budget() const { return budget_; }

    std::string str() const {
        return halted_ ? "Halted(" + std::to_string(steps_used_) + ")"
                       : "BudgetExhausted(" + std::to_string(budget_) + ")";
    }

    friend bool operator==(const Verdict &a, const Verdict &b) {
        return a.halted_ == b.halted_ && a.steps_used_ == b.steps_used_ &&
               a.budget_ == b.budget_;
    }

private:
    Verdict(bool halted, long steps, long budget)
        : halted_(halted), steps_used_(steps), budget_(budget) {}

    bool halted_;
    long steps_used_;
    long budget_;
};

}  // namespace zec
