#include "zec/bounds.hpp"

#include <cmath>
#include <cstdio>

namespace zec {

namespace {

Integer ipow(long base, long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

Integer ipow(const Integer &base, long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

std::string format6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

bool BoundInterval::is_point() const { return Integer(alpha_best) == ipow(cover_upper, n_used); }

double BoundInterval::theta_lower() const {
    return std::pow(static_cast<double>(alpha_best), 1.0 / n_used);
}
double BoundInterval::theta_upper() const { return static_cast<double>(cover_upper); }
double BoundInterval::c0_lower() const { return std::log2(static_cast<double>(alpha_best)) / n_used; }
double BoundInterval::c0_upper() const { return std::log2(static_cast<double>(cover_upper)); }

std::string BoundInterval::theta_lower_display() const { return format6(theta_lower()); }
std::string BoundInterval::theta_upper_display() const { return format6(theta_upper()); }
std::string BoundInterval::c0_lower_display() const { return format6(c0_lower()); }
std::string BoundInterval::c0_upper_display() const { return format6(c0_upper()); }

BoundInterval theta_bounds(const Graph &g, int n_max, const Limits &limits) {
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");

    BoundInterval bi;
    bi.n_max = n_max;
    bi.cover_upper = clique_cover_number(g, limits);

    Graph power = g;
    for (int k = 1; k <= n_max; ++k) {
        if (k > 1) power = strong_product(power, g, limits);
        const long alpha = independence_number(power, limits);
        bi.alpha_values.push_back(alpha);
        if (k == 1) {
            bi.alpha_best = alpha;
            bi.n_used = 1;
        } else {
            // alpha^{1/k} > best^{1/n_used}  iff  alpha^{n_used} > best^{k}
            if (ipow(alpha, bi.n_used) > ipow(bi.alpha_best, k)) {
                bi.alpha_best = alpha;
                bi.n_used = k;
            }
        }
    }
    return bi;
}

BoundInterval c0_bounds(const Channel &w, int n_max, const Limits &limits) {
    return theta_bounds(confusability_graph(w), n_max, limits);
}

Verdict semidecide_theta_above(const Graph &g, const Rational &mu, long budget_n,
                               const Limits &limits, std::vector<long> *alpha_trace) {
    if (mu < Rational(1)) throw InvalidInput("mu must be >= 1");
    if (budget_n < 1) throw InvalidInput("budget must be >= 1");

    const Integer p = mu.numerator();
    const Integer q = mu.denominator();
    Graph power = g;
    for (long n = 1; n <= budget_n; ++n) {
        if (n > 1) power = strong_product(power, g, limits);
        const long alpha = independence_number(power, limits);
        if (alpha_trace) alpha_trace->push_back(alpha);
        // alpha > (p/q)^n  iff  alpha * q^n > p^n
        if (Integer(alpha) * ipow(q, n) > ipow(p, n)) return Verdict::halted(n, budget_n);
    }
    return Verdict::budget_exhausted(budget_n);
}

Verdict semidecide_c0_above(const Channel &w, const Rational &lambda, long budget_n,
                            const Limits &limits, std::vector<long> *alpha_trace) {
    if (lambda.sign() < 0) throw InvalidInput("lambda must be >= 0");
    if (budget_n < 1) throw InvalidInput("budget must be >= 1");
    const Integer q = lambda.denominator();
    if (q > limits.threshold_denominator_cap)
        throw NonDyadicThreshold("denominator " + q.get_str() + " > " +
                                 std::to_string(limits.threshold_denominator_cap));
    const long qs = q.get_si();
    const Integer p = lambda.numerator();

    const Graph g = confusability_graph(w);
    Graph power = g;
    for (long n = 1; n <= budget_n; ++n) {
        if (n > 1) power = strong_product(power, g, limits);
        const long alpha = independence_number(power, limits);
        if (alpha_trace) alpha_trace->push_back(alpha);
        // alpha > 2^{(p/q) n}  iff  alpha^q > 2^{p n}
        Integer lhs = ipow(alpha, qs);
        Integer rhs;
        Integer pn = p * n;
        if (!pn.fits_ulong_p()) throw NonDyadicThreshold("exponent p*n too large");
        mpz_ui_pow_ui(rhs.get_mpz_t(), 2, pn.get_ui());
        if (lhs > rhs) return Verdict::halted(n, budget_n);
    }
    return Verdict::budget_exhausted(budget_n);
}

}  // namespace zec
