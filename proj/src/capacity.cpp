#include "zec/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace zec {

namespace {

struct BaOutcome {
    double lower;
    double upper;
    long iterations;
};

BaOutcome blahut_arimoto(const std::vector<std::vector<double>> &w, double tol, long max_iter,
                         std::vector<BaBracket> *trace) {
    const int in = static_cast<int>(w.size());
    const int out = static_cast<int>(w[0].size());
    std::vector<double> p(in, 1.0 / in), q(out), d(in);

    for (long iter = 1; iter <= max_iter; ++iter) {
        std::fill(q.begin(), q.end(), 0.0);
        for (int x = 0; x < in; ++x)
            for (int y = 0; y < out; ++y) q[y] += p[x] * w[x][y];

        for (int x = 0; x < in; ++x) {
            double dx = 0.0;
            for (int y = 0; y < out; ++y)
                if (w[x][y] > 0.0) dx += w[x][y] * std::log2(w[x][y] / q[y]);
            d[x] = dx;
        }
        const double upper = *std::max_element(d.begin(), d.end());
        double zsum = 0.0;
        for (int x = 0; x < in; ++x) zsum += p[x] * std::exp2(d[x]);
        const double lower = std::log2(zsum);
        if (trace) trace->push_back({lower, upper});
        if (upper - lower <= tol) return {lower, upper, iter};

        for (int x = 0; x < in; ++x) p[x] *= std::exp2(d[x]);
        for (int x = 0; x < in; ++x) p[x] /= zsum;
    }
    throw ToleranceNotReached(max_iter);
}

std::vector<std::vector<double>> to_double_matrix(const Channel &w) {
    std::vector<std::vector<double>> m(w.input_size(), std::vector<double>(w.output_size()));
    for (int x = 0; x < w.input_size(); ++x)
        for (int y = 0; y < w.output_size(); ++y) m[x][y] = w.entry(x, y).to_double();
    return m;
}

}  // namespace

CapacityEstimate dmc_capacity(const Channel &w, double tol, const Limits &limits,
                              std::vector<BaBracket> *trace) {
    if (tol <= 0.0) throw InvalidInput("tolerance must be positive");
    const BaOutcome r =
        blahut_arimoto(to_double_matrix(w), tol, limits.capacity_max_iterations, trace);
    return {(r.lower + r.upper) / 2, (r.upper - r.lower) / 2, r.iterations, true};
}

StateMixture StateMixture::validate(std::vector<Rational> q) {
    if (q.empty()) throw InvalidInput("state mixture must be non-empty");
    Rational sum(0);
    for (const auto &e : q) {
        if (e.sign() < 0) throw InvalidInput("state mixture has a negative weight");
        sum += e;
    }
    if (sum != Rational(1)) throw InvalidInput("state mixture must sum to 1, got " + sum.str());
    return StateMixture{std::move(q)};
}

StateMixture StateMixture::uniform(int states) {
    return validate(std::vector<Rational>(states, Rational(1, states)));
}

Channel mix_channel(const ZeroOneAVC &avc, const StateMixture &mix) {
    if (static_cast<int>(mix.q.size()) != avc.state_count())
        throw InvalidInput("state mixture has wrong length");
    std::vector<std::vector<Rational>> rows(avc.input_size(),
                                            std::vector<Rational>(avc.output_size(), Rational(0)));
    for (int s = 0; s < avc.state_count(); ++s)
        for (int x = 0; x < avc.input_size(); ++x) rows[x][avc.map(s, x)] += mix.q[s];
    return Channel::validate(std::move(rows));
}

namespace {

// ---- Certified minimization of a convex function on [0,1] ----------------
//
// Evaluations carry a known absolute error eps. Convexity turns neighboring
// secants into valid linear minorants outside their base interval, which
// yields a certified lower bound per segment; the segment with the weakest
// bound is bisected until the global gap closes. Grid points stay dyadic.

struct CertifiedMin {
    double lower;
    double upper;
    double argmin;
};

class ConvexMinimizer {
public:
    ConvexMinimizer(std::function<double(double)> f, double eps, long &eval_budget)
        : f_(std::move(f)), eps_(eps), budget_(eval_budget), initial_budget_(eval_budget) {}

    CertifiedMin run(double gap_target) {
        evaluate(0.0);
        evaluate(0.5);
        evaluate(1.0);
        for (;;) {
            double upper = INFINITY, argmin = 0.0, lower = INFINITY;
            for (const auto &[x, fx] : pts_) {
                if (fx + eps_ < upper) {
                    upper = fx + eps_;
                    argmin = x;
                }
                lower = std::min(lower, fx - eps_);
            }
            double weakest = INFINITY;
            std::size_t weakest_seg = 0;
            for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
                const double lb = segment_lower(i);
                if (lb < weakest) {
                    weakest = lb;
                    weakest_seg = i;
                }
            }
            lower = std::min(lower, weakest);
            if (upper - lower <= gap_target + 1e-12) return {lower, upper, argmin};
            evaluate((xs_[weakest_seg] + xs_[weakest_seg + 1]) / 2);
        }
    }

private:
    void evaluate(double x) {
        if (budget_-- <= 0) throw ToleranceNotReached(initial_budget_);
        pts_[x] = f_(x);
        xs_.clear();
        for (const auto &[xx, _] : pts_) xs_.push_back(xx);
    }

    // Certified lower bound for f on (xs[i], xs[i+1]).
    double segment_lower(std::size_t i) const {
        const double a = xs_[i], b = xs_[i + 1];
        const double fa = pts_.at(a), fb = pts_.at(b);

        bool have_left = i >= 1;
        double sl = 0.0;
        if (have_left) {
            const double x0 = xs_[i - 1];
            sl = (fa - pts_.at(x0) - 2 * eps_) / (a - x0);  // underestimates the secant
        }
        bool have_right = i + 2 < xs_.size();
        double sr = 0.0;
        if (have_right) {
            const double x3 = xs_[i + 2];
            sr = (pts_.at(x3) - fb + 2 * eps_) / (x3 - b);  // overestimates the secant
        }

        auto l1 = [&](double x) { return fa - eps_ + (x - a) * sl; };
        auto l2 = [&](double x) { return fb - eps_ - (b - x) * sr; };

        if (have_left && have_right) {
            double best = std::min(std::max(l1(a), l2(a)), std::max(l1(b), l2(b)));
            if (sl != sr) {
                // Intersection of the two minorants.
                const double x = ((fb - eps_ - (b)*sr) - (fa - eps_ - a * sl)) / (sl - sr);
                if (x > a && x < b) best = std::min(best, std::max(l1(x), l2(x)));
            }
            return best;
        }
        if (have_left) return std::min(l1(a), l1(b));
        if (have_right) return std::min(l2(a), l2(b));
        return -INFINITY;
    }

    std::function<double(double)> f_;
    double eps_;
    long &budget_;
    long initial_budget_;
    std::map<double, double> pts_;
    std::vector<double> xs_;
};

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cumsum = 0.0, theta = 0.0;
    int rho = 0;
    for (int i = 0; i < static_cast<int>(u.size()); ++i) {
        cumsum += u[i];
        if (u[i] - (cumsum - 1.0) / (i + 1) > 0.0) {
            rho = i + 1;
            theta = (cumsum - 1.0) / (i + 1);
        }
    }
    (void)rho;
    for (auto &x : v) x = std::max(0.0, x - theta);
    return v;
}

}  // namespace

CavResult cav(const ZeroOneAVC &avc, double tol, const Limits &limits) {
    if (tol <= 0.0) throw InvalidInput("tolerance must be positive");

    CavResult result;

    // Symmetrizability gate. The LP oracle is total and its answers are
    // verified (witness) or certified (phase-1 infeasibility); the
    // enumeration decider cross-checks it whenever the state set fits.
    auto lp = is_symmetrizable_lp(avc);
    if (static_cast<std::size_t>(avc.state_count()) <= limits.symmetrizer_enum_cap) {
        auto en = is_symmetrizable_enum(avc, limits);
        result.oracle_disagreement = en.has_value() != lp.has_value();
    }
    if (lp.has_value()) {
        result.symmetrizable = true;
        result.symmetrizer = std::move(lp);
        result.estimate = {0.0, 0.0, 0, true};
        return result;
    }

    // Duplicate states are redundant mixture components; minimize over the
    // distinct ones and report full-width mixtures.
    std::vector<int> reps;
    {
        std::map<std::vector<int>, int> seen;
        for (int s = 0; s < avc.state_count(); ++s)
            if (seen.emplace(avc.states()[s], s).second) reps.push_back(s);
    }
    const int k = static_cast<int>(reps.size());

    long evals = 0;
    auto capacity_at = [&](const std::vector<double> &q_reps, double ba_tol) -> double {
        std::vector<std::vector<double>> m(avc.input_size(),
                                           std::vector<double>(avc.output_size(), 0.0));
        for (int j = 0; j < k; ++j)
            for (int x = 0; x < avc.input_size(); ++x) m[x][avc.map(reps[j], x)] += q_reps[j];
        ++evals;
        const BaOutcome r = blahut_arimoto(m, ba_tol, limits.capacity_max_iterations, nullptr);
        return (r.lower + r.upper) / 2;
    };
    auto full_mixture = [&](const std::vector<Rational> &q_reps) {
        std::vector<Rational> q(avc.state_count(), Rational(0));
        for (int j = 0; j < k; ++j) q[reps[j]] = q_reps[j];
        return q;
    };
    auto dyadic = [](double x) {
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), x);
        return Rational(q);
    };

    if (k == 1) {
        const auto w = mix_channel(avc, StateMixture::uniform(avc.state_count()));
        result.estimate = dmc_capacity(w, tol, limits);
        result.minimizer = full_mixture({Rational(1)});
        return result;
    }

    if (k == 2 || k == 3) {
        long budget = limits.capacity_max_iterations;
        CertifiedMin outer{};
        std::vector<Rational> argmin_reps;

        if (k == 2) {
            ConvexMinimizer m(
                [&](double t) { return capacity_at({t, 1.0 - t}, tol / 2); }, tol / 4, budget);
            outer = m.run(tol);
            argmin_reps = {dyadic(outer.argmin), Rational(1) - dyadic(outer.argmin)};
        } else {
            // Nested slices: q = (t, (1-t)u, (1-t)(1-u)); the inner minimum
            // over u is convex in t.
            std::map<double, double> inner_argmin;
            auto inner_min = [&](double t) {
                ConvexMinimizer m(
                    [&](double u) {
                        return capacity_at({t, (1.0 - t) * u, (1.0 - t) * (1.0 - u)}, tol / 4);
                    },
                    tol / 8, budget);
                const CertifiedMin r = m.run(tol / 2);
                inner_argmin[t] = r.argmin;
                return (r.lower + r.upper) / 2;
            };
            ConvexMinimizer m(inner_min, tol / 4, budget);
            outer = m.run(tol);
            const Rational t = dyadic(outer.argmin);
            const Rational u = dyadic(inner_argmin.at(outer.argmin));
            argmin_reps = {t, (Rational(1) - t) * u, (Rational(1) - t) * (Rational(1) - u)};
        }
        result.estimate = {(outer.lower + outer.upper) / 2, (outer.upper - outer.lower) / 2,
                           evals, true};
        result.minimizer = full_mixture(argmin_reps);
        return result;
    }

    // k >= 4: projected subgradient with finite-difference gradients and
    // diminishing steps; best iterate kept. The error field is an estimate,
    // not a certificate.
    std::vector<double> q(k, 1.0 / k);
    double fq = capacity_at(q, tol / 2);
    double best = fq;
    std::vector<double> best_q = q;
    const long rounds = 200;
    const double fd = 1e-4;
    for (long t = 1; t <= rounds; ++t) {
        std::vector<double> g(k, 0.0);
        for (int i = 0; i < k; ++i) {
            std::vector<double> qp = q;
            qp[i] += fd;
            qp = project_simplex(qp);
            g[i] = (capacity_at(qp, tol / 2) - fq) / fd;
        }
        double norm = 0.0;
        for (double gi : g) norm += gi * gi;
        norm = std::sqrt(norm) + 1e-12;
        const double step = 0.25 / std::sqrt(static_cast<double>(t));
        for (int i = 0; i < k; ++i) q[i] -= step * g[i] / norm;
        q = project_simplex(q);
        fq = capacity_at(q, tol / 2);
        if (fq < best) {
            best = fq;
            best_q = q;
        }
    }
    result.estimate = {best, std::max(tol, std::abs(fq - best)), evals, false};
    std::vector<Rational> reps_q;
    Rational acc(0);
    for (int j = 0; j < k; ++j) {
        reps_q.push_back(dyadic(best_q[j]));
        acc += reps_q.back();
    }
    reps_q.back() += Rational(1) - acc;  // exact renormalization of the report
    result.minimizer = full_mixture(reps_q);
    return result;
}

}  // namespace zec
