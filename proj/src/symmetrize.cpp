#include "zec/symmetrize.hpp"

#include <algorithm>
#include <map>

#include "zec/simplex.hpp"

namespace zec {

bool satisfies_symmetry(const ZeroOneAVC &avc, const Symmetrizer &u) {
    const int in = avc.input_size();
    const int out = avc.output_size();
    const int ns = avc.state_count();
    if (static_cast<int>(u.rows.size()) != in) return false;
    for (const auto &row : u.rows) {
        if (static_cast<int>(row.size()) != ns) return false;
        Rational sum(0);
        for (const auto &e : row) {
            if (e.sign() < 0) return false;
            sum += e;
        }
        if (sum != Rational(1)) return false;
    }
    for (int x = 0; x < in; ++x) {
        for (int xp = x + 1; xp < in; ++xp) {
            for (int y = 0; y < out; ++y) {
                Rational lhs(0), rhs(0);
                for (int s = 0; s < ns; ++s) {
                    if (avc.map(s, xp) == y) lhs += u.rows[x][s];
                    if (avc.map(s, x) == y) rhs += u.rows[xp][s];
                }
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

namespace {

// Size-nu subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int nu) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(nu);
    for (int i = 0; i < nu; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        int i = nu - 1;
        while (i >= 0 && c[i] == n - nu + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < nu; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// Uniform-support identity check for one pair: with |I(x)| = |I(x')| = nu,
// the two push-forward distributions agree iff the output counts agree.
bool pair_ok(const ZeroOneAVC &avc, const std::vector<int> &ix, const std::vector<int> &ixp,
             int x, int xp) {
    std::vector<int> lhs(avc.output_size(), 0), rhs(avc.output_size(), 0);
    for (int s : ix) ++lhs[avc.map(s, xp)];
    for (int s : ixp) ++rhs[avc.map(s, x)];
    return lhs == rhs;
}

struct EnumSearch {
    const ZeroOneAVC &avc;
    const std::vector<std::vector<std::vector<int>>> &candidates;  // per x
    std::vector<const std::vector<int> *> chosen;

    bool descend(int x) {
        if (x == avc.input_size()) return true;
        for (const auto &cand : candidates[x]) {
            bool ok = true;
            for (int prev = 0; prev < x && ok; ++prev)
                ok = pair_ok(avc, *chosen[prev], cand, prev, x);
            if (!ok) continue;
            chosen[x] = &cand;
            if (descend(x + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Symmetrizer> is_symmetrizable_enum(const ZeroOneAVC &avc, const Limits &limits) {
    const int ns = avc.state_count();
    if (static_cast<std::size_t>(ns) > limits.symmetrizer_enum_cap)
        throw StateSetTooLargeForEnum(ns, limits.symmetrizer_enum_cap);
    const int in = avc.input_size();

    std::vector<std::vector<int>> reach;
    for (int x = 0; x < in; ++x) reach.push_back(avc.reachable_outputs(x));

    int nu_bar = ns;
    for (int x = 0; x < in; ++x) {
        for (int xp = x + 1; xp < in; ++xp) {
            std::vector<int> common;
            std::set_intersection(reach[x].begin(), reach[x].end(), reach[xp].begin(),
                                  reach[xp].end(), std::back_inserter(common));
            nu_bar = std::min(nu_bar, static_cast<int>(common.size()));
        }
    }
    if (nu_bar == 0) return std::nullopt;

    for (int nu = 1; nu <= nu_bar; ++nu) {
        // Supports of size nu whose images from x are nu distinct outputs.
        std::vector<std::vector<std::vector<int>>> candidates(in);
        for (int x = 0; x < in; ++x) {
            for (auto &c : combinations(ns, nu)) {
                std::vector<int> imgs;
                for (int s : c) imgs.push_back(avc.map(s, x));
                std::sort(imgs.begin(), imgs.end());
                if (std::adjacent_find(imgs.begin(), imgs.end()) == imgs.end())
                    candidates[x].push_back(std::move(c));
            }
        }
        if (std::any_of(candidates.begin(), candidates.end(),
                        [](const auto &c) { return c.empty(); }))
            continue;

        EnumSearch search{avc, candidates, std::vector<const std::vector<int> *>(in, nullptr)};
        if (search.descend(0)) {
            Symmetrizer u;
            u.rows.assign(in, std::vector<Rational>(ns, Rational(0)));
            for (int x = 0; x < in; ++x)
                for (int s : *search.chosen[x]) u.rows[x][s] = Rational(1, nu);
            if (!satisfies_symmetry(avc, u))
                throw std::logic_error("enumerated symmetrizer failed re-verification");
            return u;
        }
    }
    return std::nullopt;
}

std::optional<Symmetrizer> is_symmetrizable_lp(const ZeroOneAVC &avc) {
    const int in = avc.input_size();
    const int out = avc.output_size();

    // Collapse duplicate states to their first occurrence.
    std::vector<int> reps;
    std::map<std::vector<int>, int> seen;
    for (int s = 0; s < avc.state_count(); ++s) {
        if (seen.emplace(avc.states()[s], s).second) reps.push_back(s);
    }
    const int k = static_cast<int>(reps.size());

    // Variables u[x][j] (j indexes reps), row-major.
    const int nvars = in * k;
    auto var = [k](int x, int j) { return x * k + j; };

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int x = 0; x < in; ++x) {
        std::vector<Rational> row(nvars, Rational(0));
        for (int j = 0; j < k; ++j) row[var(x, j)] = Rational(1);
        a.push_back(std::move(row));
        b.push_back(Rational(1));
    }
    for (int x = 0; x < in; ++x) {
        for (int xp = x + 1; xp < in; ++xp) {
            for (int y = 0; y < out; ++y) {
                std::vector<Rational> row(nvars, Rational(0));
                for (int j = 0; j < k; ++j) {
                    if (avc.map(reps[j], xp) == y) row[var(x, j)] += Rational(1);
                    if (avc.map(reps[j], x) == y) row[var(xp, j)] -= Rational(1);
                }
                a.push_back(std::move(row));
                b.push_back(Rational(0));
            }
        }
    }

    auto sol = solve_equality_feasibility(std::move(a), std::move(b));
    if (!sol) return std::nullopt;

    Symmetrizer u;
    u.rows.assign(in, std::vector<Rational>(avc.state_count(), Rational(0)));
    for (int x = 0; x < in; ++x)
        for (int j = 0; j < k; ++j) u.rows[x][reps[j]] = (*sol)[var(x, j)];
    if (!satisfies_symmetry(avc, u))
        throw std::logic_error("LP symmetrizer failed re-verification");
    return u;
}

}  // namespace zec
