#include "zec/simplex.hpp"

#include <stdexcept>

namespace zec {

std::optional<std::vector<Rational>> solve_equality_feasibility(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto &row : a)
        if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");
    if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
    if (m == 0) return std::vector<Rational>(n, Rational(0));

    // Tableau [A | I | b] with one artificial per row; phase-1 objective is
    // the sum of artificials.
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i].sign() < 0) {
            for (auto &e : a[i]) e = -e;
            b[i] = -b[i];
        }
    }
    const std::size_t cols = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = Rational(1);
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced costs r_j = c_j - sum_i t[i][j] (artificial costs are 1) and
    // objective z = sum b_i.
    std::vector<Rational> reduced(cols, Rational(0));
    Rational z(0);
    for (std::size_t j = 0; j < cols; ++j) {
        Rational colsum(0);
        for (std::size_t i = 0; i < m; ++i) colsum += t[i][j];
        reduced[j] = (j < n ? Rational(0) : Rational(1)) - colsum;
    }
    for (std::size_t i = 0; i < m; ++i) z += b[i];

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const Rational inv = Rational(1) / t[pr][pc];
        for (std::size_t j = 0; j < cols; ++j) t[pr][j] *= inv;
        b[pr] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc].is_zero()) continue;
            const Rational f = t[i][pc];
            for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
            b[i] -= f * b[pr];
        }
        if (!reduced[pc].is_zero()) {
            const Rational f = reduced[pc];
            for (std::size_t j = 0; j < cols; ++j) reduced[j] -= f * t[pr][j];
            z -= f * b[pr];
        }
        basis[pr] = pc;
    };

    for (;;) {
        // Bland: smallest-index column with negative reduced cost.
        std::size_t entering = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (reduced[j].sign() < 0) { entering = j; break; }
        }
        if (entering == cols) break;

        std::size_t leaving = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][entering].sign() <= 0) continue;
            const Rational ratio = b[i] / t[i][entering];
            if (leaving == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == m) throw std::logic_error("phase-1 objective unbounded");
        pivot(leaving, entering);
    }

    if (!z.is_zero()) return std::nullopt;

    // Drive any remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!t[i][j].is_zero()) { pc = j; break; }
        }
        if (pc < n) pivot(i, pc);
        // else: redundant row; its basic artificial stays at value 0.
    }

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = b[i];
    return x;
}

}  // namespace zec
