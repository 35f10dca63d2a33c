#include "zec/channel.hpp"

#include <algorithm>
#include <cmath>

namespace zec {

Channel Channel::validate(std::vector<std::vector<Rational>> rows) {
    const auto in = static_cast<long>(rows.size());
    if (in < 2) throw AlphabetTooSmall("input", in);
    const auto out = static_cast<long>(rows[0].size());
    if (out < 2) throw AlphabetTooSmall("output", out);
    for (const auto &row : rows)
        if (static_cast<long>(row.size()) != out)
            throw InvalidInput("ragged channel matrix");

    const Rational one(1);
    for (int x = 0; x < in; ++x) {
        Rational sum(0);
        for (int y = 0; y < out; ++y) {
            const Rational &e = rows[x][y];
            if (e.sign() < 0 || e > one) throw EntryOutOfRange(x, y);
            sum += e;
        }
        if (sum != one) throw NonStochasticRow(x, sum.str());
    }
    return Channel(std::move(rows));
}

std::vector<int> Channel::support(int x) const {
    std::vector<int> s;
    for (int y = 0; y < output_size(); ++y)
        if (rows_[x][y].sign() > 0) s.push_back(y);
    return s;
}

Graph confusability_graph(const Channel &w) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < w.input_size(); ++x) {
        for (int xp = x + 1; xp < w.input_size(); ++xp) {
            for (int y = 0; y < w.output_size(); ++y) {
                if (w.entry(x, y).sign() > 0 && w.entry(xp, y).sign() > 0) {
                    edges.emplace_back(x, xp);
                    break;
                }
            }
        }
    }
    return Graph(w.input_size(), std::move(edges));
}

bool is_useless(const Channel &w) { return is_complete(confusability_graph(w)); }

ZeroErrorCode max_zero_error_code(const Channel &w, int n, const Limits &limits) {
    if (n < 1) throw InvalidInput("block length must be >= 1");
    Integer words;
    mpz_ui_pow_ui(words.get_mpz_t(), static_cast<unsigned long>(w.input_size()),
                  static_cast<unsigned long>(n));
    if (words > static_cast<long>(limits.enumeration_cap))
        throw EnumerationCapExceeded("|X|^n = " + words.get_str() + " exceeds " +
                                     std::to_string(limits.enumeration_cap));

    // The word count is the real guardrail here; let the power graph use it.
    Limits power_limits = limits;
    power_limits.product_cap = std::max(limits.product_cap, limits.enumeration_cap);

    const Graph power = strong_power(confusability_graph(w), n, power_limits);
    const std::vector<int> mis = max_independent_set(power, power_limits);

    ZeroErrorCode code;
    code.block_length = n;
    for (int v : mis) {
        std::vector<int> word(n);
        int rem = v;
        for (int t = n - 1; t >= 0; --t) {
            word[t] = rem % w.input_size();
            rem /= w.input_size();
        }
        code.codewords.push_back(std::move(word));
    }
    std::sort(code.codewords.begin(), code.codewords.end());
    return code;
}

namespace {

long ceil_log2(long v) {
    long bits = 0;
    while ((1L << bits) < v) ++bits;
    return bits;
}

void check_entry_contract(const ApproxReal &e, int x, int y) {
    // Spot check of approximant(k) in [-2^{-k}, 1 + 2^{-k}] at small k; the
    // full contract is a semantic property of the caller's sequences.
    for (long k = 0; k <= 8; ++k) {
        const Rational a = e.approximant(k);
        const Rational eps = Rational::pow2(-k);
        if (a < -eps || a > Rational(1) + eps) throw EntryOutOfRange(x, y);
    }
}

}  // namespace

ApproxChannel::ApproxChannel(std::vector<std::vector<ApproxReal>> rows) : rows_(std::move(rows)) {
    const auto in = static_cast<long>(rows_.size());
    if (in < 2) throw AlphabetTooSmall("input", in);
    const auto out = static_cast<long>(rows_[0].size());
    if (out < 2) throw AlphabetTooSmall("output", out);
    for (const auto &row : rows_)
        if (static_cast<long>(row.size()) != out) throw InvalidInput("ragged channel matrix");
    for (int x = 0; x < in; ++x)
        for (int y = 0; y < out; ++y) check_entry_contract(rows_[x][y], x, y);
}

ApproxChannel ApproxChannel::from_exact(const Channel &w) {
    std::vector<std::vector<ApproxReal>> rows;
    rows.reserve(w.input_size());
    for (int x = 0; x < w.input_size(); ++x) {
        std::vector<ApproxReal> row;
        row.reserve(w.output_size());
        for (int y = 0; y < w.output_size(); ++y) row.push_back(real_from_rational(w.entry(x, y)));
        rows.push_back(std::move(row));
    }
    return ApproxChannel(std::move(rows));
}

ApproxReal ApproxChannel::row_correlation(int x, int x_prime) const {
    const int out = output_size();
    const long pad = ceil_log2(2L * out) + 1;
    std::vector<ApproxReal> a = rows_[x];
    std::vector<ApproxReal> b = rows_[x_prime];
    auto fn = [a = std::move(a), b = std::move(b), pad](long n) -> Rational {
        Rational sum(0);
        for (std::size_t y = 0; y < a.size(); ++y)
            sum += a[y].approximant(n + pad) * b[y].approximant(n + pad);
        return sum;
    };
    return ApproxReal(std::move(fn), Provenance::Derived);
}

std::vector<Graph> confusability_graph_staged(const ApproxChannel &w, long budget) {
    if (budget < 1) throw InvalidInput("budget must be >= 1");
    const int in = w.input_size();

    // Halt step per pair (0 = never within budget); G_k then collects the
    // pairs revealed by step k.
    std::vector<std::vector<long>> halt(in, std::vector<long>(in, 0));
    for (int x = 0; x < in; ++x) {
        for (int xp = x + 1; xp < in; ++xp) {
            const Verdict v = sign_positive(w.row_correlation(x, xp), budget);
            halt[x][xp] = v.halted() ? v.steps_used() : 0;
        }
    }

    std::vector<Graph> stages;
    stages.reserve(static_cast<std::size_t>(budget));
    for (long k = 1; k <= budget; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < in; ++x)
            for (int xp = x + 1; xp < in; ++xp)
                if (halt[x][xp] != 0 && halt[x][xp] <= k) edges.emplace_back(x, xp);
        stages.emplace_back(in, std::move(edges));
    }
    return stages;
}

}  // namespace zec
