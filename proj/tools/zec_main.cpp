// zec: exact toolkit for zero-error capacity bounds, Shannon graph capacity,
// and 0-1 arbitrarily varying channels.
//
// Exit codes: 0 success/accepted, 2 invalid input, 3 budget exhausted,
// 4 guardrail cap exceeded, 5 tolerance not reached.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zec/approx_real.hpp"
#include "zec/avc.hpp"
#include "zec/bounds.hpp"
#include "zec/capacity.hpp"
#include "zec/channel.hpp"
#include "zec/errors.hpp"
#include "zec/graph.hpp"
#include "zec/io.hpp"
#include "zec/symmetrize.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExhausted = 3;
constexpr int kExitCapExceeded = 4;
constexpr int kExitToleranceNotReached = 5;

struct Options {
    std::string format = "human";
    bool machine() const { return format == "machine"; }
};

zec::Limits limits_from_env() {
    zec::Limits l;
    auto read = [](const char *name, auto &field) {
        if (const char *v = std::getenv(name)) field = static_cast<std::decay_t<decltype(field)>>(std::strtoll(v, nullptr, 10));
    };
    read("ZEC_PRODUCT_CAP", l.product_cap);
    read("ZEC_CLIQUE_COVER_CAP", l.clique_cover_cap);
    read("ZEC_ENUM_CAP", l.enumeration_cap);
    read("ZEC_STATE_CAP", l.state_cap);
    read("ZEC_SYM_ENUM_CAP", l.symmetrizer_enum_cap);
    read("ZEC_THRESHOLD_DEN_CAP", l.threshold_denominator_cap);
    read("ZEC_MAX_ITERATIONS", l.capacity_max_iterations);
    return l;
}

void emit(const Options &opt, const json &machine, const std::string &human) {
    if (opt.machine())
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

json verdict_json(const zec::Verdict &v) {
    json j;
    j["halted"] = v.halted();
    j["budget"] = v.budget();
    if (v.halted()) j["steps_used"] = v.steps_used();
    return j;
}

json bounds_json(const zec::BoundInterval &bi) {
    json j;
    j["alpha_values"] = bi.alpha_values;
    j["n_max"] = bi.n_max;
    j["n_used"] = bi.n_used;
    j["theta_lower"] = {{"alpha", bi.alpha_best}, {"root", bi.n_used}};
    j["theta_upper"] = bi.cover_upper;
    j["is_point"] = bi.is_point();
    j["display"] = {{"theta_lower", bi.theta_lower_display()},
                    {"theta_upper", bi.theta_upper_display()},
                    {"c0_lower", bi.c0_lower_display()},
                    {"c0_upper", bi.c0_upper_display()},
                    {"note", "decimal values are display-only approximations"}};
    return j;
}

std::string bounds_human(const zec::BoundInterval &bi) {
    std::string out;
    out += "alpha values (k = 1.." + std::to_string(bi.n_max) + "):";
    for (long a : bi.alpha_values) out += " " + std::to_string(a);
    out += "\ntheta  in [" + std::to_string(bi.alpha_best) + "^(1/" + std::to_string(bi.n_used) +
           "), " + std::to_string(bi.cover_upper) + "]  ~ [" + bi.theta_lower_display() + ", " +
           bi.theta_upper_display() + "]\n";
    out += "C0     in [log2 " + std::to_string(bi.alpha_best) + " / " + std::to_string(bi.n_used) +
           ", log2 " + std::to_string(bi.cover_upper) + "]  ~ [" + bi.c0_lower_display() + ", " +
           bi.c0_upper_display() + "]\n";
    if (bi.is_point()) out += "interval is exact (lower = upper)\n";
    return out;
}

json symmetrizer_json(const zec::Symmetrizer &u) {
    json rows = json::array();
    for (const auto &row : u.rows) {
        json r = json::array();
        for (const auto &e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

int run_cli(int argc, char **argv) {
    CLI::App app{"exact zero-error capacity toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();

    const zec::Limits limits = limits_from_env();
    std::string path, path2;
    int n_max = 1, block = 1;
    long budget = 1;
    std::string mu_text, lambda_text;
    double tol = 1e-6;
    std::optional<long> halt_step;
    long staged = 0;

    auto *cmd_graph = app.add_subcommand("graph", "confusability graph of a channel");
    cmd_graph->add_option("file", path)->required();
    cmd_graph->add_option("--staged", staged, "also reveal edges with the given budget");

    auto *cmd_bounds = app.add_subcommand("bounds", "certified Theta/C0 interval");
    cmd_bounds->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    cmd_bounds->add_option("file", path)->required();

    auto *cmd_code = app.add_subcommand("code", "maximum zero-error code");
    cmd_code->add_option("--n", block)->required()->check(CLI::PositiveNumber);
    cmd_code->add_option("file", path)->required();

    auto *cmd_to_avc = app.add_subcommand("to-avc", "0-1 AVC with the same support as a DMC");
    cmd_to_avc->add_option("file", path)->required();

    auto *cmd_to_dmc = app.add_subcommand("to-dmc", "uniform state mixture of a 0-1 AVC");
    cmd_to_dmc->add_option("file", path)->required();

    auto *cmd_from_graph = app.add_subcommand("from-graph", "channel whose confusability graph is G");
    cmd_from_graph->add_option("file", path)->required();

    auto *cmd_useless = app.add_subcommand("useless", "is C0(W) = 0?");
    cmd_useless->add_option("file", path)->required();

    auto *cmd_cmax = app.add_subcommand("cmax-zero", "is Cmax of a 0-1 AVC = 0?");
    cmd_cmax->add_option("file", path)->required();

    auto *cmd_sym = app.add_subcommand("symmetrizable", "symmetrizability of a 0-1 AVC");
    cmd_sym->add_option("file", path)->required();

    auto *cmd_cav = app.add_subcommand("cav", "average-error capacity of a 0-1 AVC");
    cmd_cav->add_option("--tol", tol)->check(CLI::PositiveNumber);
    cmd_cav->add_option("file", path)->required();

    auto *cmd_semi = app.add_subcommand("semidecide", "budgeted threshold semi-decisions");
    cmd_semi->require_subcommand(1);
    auto *cmd_theta = cmd_semi->add_subcommand("theta-above", "halt iff Theta(G) > mu");
    cmd_theta->add_option("--mu", mu_text)->required();
    cmd_theta->add_option("--budget", budget)->required()->check(CLI::PositiveNumber);
    cmd_theta->add_option("file", path)->required();
    auto *cmd_c0 = cmd_semi->add_subcommand("c0-above", "halt iff C0(W) > lambda");
    cmd_c0->add_option("--lambda", lambda_text)->required();
    cmd_c0->add_option("--budget", budget)->required()->check(CLI::PositiveNumber);
    cmd_c0->add_option("file", path)->required();

    auto *cmd_specker = app.add_subcommand(
        "specker-demo", "sign decision against a staircase real with a hidden halting step");
    cmd_specker->add_option("--halt-step", halt_step, "hidden first halting step (absent: never)");
    cmd_specker->add_option("--budget", budget)->required()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    if (*cmd_graph) {
        const auto w = zec::parse_channel(zec::read_file(path));
        const auto g = zec::confusability_graph(w);
        json j;
        j["verb"] = "graph";
        j["graph"] = json::parse(zec::serialize_graph(g));
        std::string human = zec::serialize_graph(g);
        if (staged > 0) {
            const auto stages =
                zec::confusability_graph_staged(zec::ApproxChannel::from_exact(w), staged);
            long stable = 0;
            for (long k = static_cast<long>(stages.size()); k >= 1; --k) {
                if (stages[k - 1] == g) stable = k;
                else break;
            }
            json edge_counts = json::array();
            for (const auto &s : stages) edge_counts.push_back(s.edge_count());
            j["staged"] = {{"budget", staged},
                           {"edge_counts", edge_counts},
                           {"stabilized_at", stable}};
            human += "staged revelation: stabilized at step " + std::to_string(stable) + " of " +
                     std::to_string(staged) + "\n";
        }
        emit(opt, j, human);
        return kExitOk;
    }
    if (*cmd_bounds) {
        const std::string text = zec::read_file(path);
        zec::BoundInterval bi;
        if (zec::sniff_kind(text) == zec::FileKind::Channel)
            bi = zec::c0_bounds(zec::parse_channel(text), n_max, limits);
        else
            bi = zec::theta_bounds(zec::parse_graph(text), n_max, limits);
        json j = bounds_json(bi);
        j["verb"] = "bounds";
        emit(opt, j, bounds_human(bi));
        return kExitOk;
    }
    if (*cmd_code) {
        const auto w = zec::parse_channel(zec::read_file(path));
        const auto code = zec::max_zero_error_code(w, block, limits);
        json j;
        j["verb"] = "code";
        j["block_length"] = code.block_length;
        j["size"] = code.size();
        j["codewords"] = code.codewords;
        std::string human = "M(W, " + std::to_string(code.block_length) +
                            ") = " + std::to_string(code.size()) + "\n";
        for (const auto &word : code.codewords) {
            human += " ";
            for (int letter : word) human += " " + std::to_string(letter);
            human += "\n";
        }
        emit(opt, j, human);
        return kExitOk;
    }
    if (*cmd_to_avc) {
        const auto avc = zec::dmc_to_avc(zec::parse_channel(zec::read_file(path)), limits);
        json j;
        j["verb"] = "to-avc";
        j["avc"] = json::parse(zec::serialize_avc(avc));
        j["state_count"] = avc.state_count();
        emit(opt, j, zec::serialize_avc(avc));
        return kExitOk;
    }
    if (*cmd_to_dmc) {
        const auto w = zec::avc_to_dmc(zec::parse_avc(zec::read_file(path)));
        json j;
        j["verb"] = "to-dmc";
        j["channel"] = json::parse(zec::serialize_channel(w));
        emit(opt, j, zec::serialize_channel(w));
        return kExitOk;
    }
    if (*cmd_from_graph) {
        const auto w = zec::graph_to_channel(zec::parse_graph(zec::read_file(path)));
        json j;
        j["verb"] = "from-graph";
        j["channel"] = json::parse(zec::serialize_channel(w));
        emit(opt, j, zec::serialize_channel(w));
        return kExitOk;
    }
    if (*cmd_useless) {
        const bool u = zec::is_useless(zec::parse_channel(zec::read_file(path)));
        emit(opt, {{"verb", "useless"}, {"useless", u}}, std::string(u ? "true" : "false") + "\n");
        return kExitOk;
    }
    if (*cmd_cmax) {
        const bool z = zec::cmax_is_zero(zec::parse_avc(zec::read_file(path)));
        emit(opt, {{"verb", "cmax-zero"}, {"cmax_zero", z}},
             std::string(z ? "true" : "false") + "\n");
        return kExitOk;
    }
    if (*cmd_sym) {
        const auto avc = zec::parse_avc(zec::read_file(path));
        const auto lp = zec::is_symmetrizable_lp(avc);
        json j;
        j["verb"] = "symmetrizable";
        j["symmetrizable"] = lp.has_value();
        std::string human = lp ? "symmetrizable\n" : "not symmetrizable\n";
        if (static_cast<std::size_t>(avc.state_count()) <= limits.symmetrizer_enum_cap) {
            const auto en = zec::is_symmetrizable_enum(avc, limits);
            j["oracles_agree"] = en.has_value() == lp.has_value();
            if (en.has_value() != lp.has_value())
                std::cerr << "warning: enumeration and LP deciders disagree; LP answer used\n";
        }
        if (lp) {
            j["symmetrizer"] = symmetrizer_json(*lp);
            for (const auto &row : lp->rows) {
                human += " ";
                for (const auto &e : row) human += " " + e.str();
                human += "\n";
            }
        }
        emit(opt, j, human);
        return kExitOk;
    }
    if (*cmd_cav) {
        const auto avc = zec::parse_avc(zec::read_file(path));
        const auto r = zec::cav(avc, tol, limits);
        if (r.oracle_disagreement)
            std::cerr << "warning: symmetrizability oracles disagree; LP answer used\n";
        json j;
        j["verb"] = "cav";
        j["value_bits"] = r.estimate.value_bits;
        j["certified_absolute_error"] = r.estimate.certified_absolute_error;
        j["certified"] = r.estimate.certified;
        j["iterations"] = r.estimate.iterations;
        j["symmetrizable"] = r.symmetrizable;
        if (r.symmetrizer) j["symmetrizer"] = symmetrizer_json(*r.symmetrizer);
        if (!r.minimizer.empty()) {
            json q = json::array();
            for (const auto &e : r.minimizer) q.push_back(e.str());
            j["minimizer"] = q;
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "C_av = %.9f bits (error <= %.3g, %s)\n",
                      r.estimate.value_bits, r.estimate.certified_absolute_error,
                      r.estimate.certified ? "certified" : "uncertified estimate");
        emit(opt, j, buf);
        return kExitOk;
    }
    if (*cmd_semi) {
        zec::Verdict v = zec::Verdict::budget_exhausted(budget);
        std::vector<long> alphas;
        json j;
        j["verb"] = "semidecide";
        if (*cmd_theta) {
            const auto mu = zec::Rational::parse(mu_text);
            const std::string text = zec::read_file(path);
            const zec::Graph g = zec::sniff_kind(text) == zec::FileKind::Graph
                                     ? zec::parse_graph(text)
                                     : zec::confusability_graph(zec::parse_channel(text));
            v = zec::semidecide_theta_above(g, mu, budget, limits, &alphas);
            j["mode"] = "theta-above";
            j["mu"] = mu.str();
        } else {
            const auto lambda = zec::Rational::parse(lambda_text);
            v = zec::semidecide_c0_above(zec::parse_channel(zec::read_file(path)), lambda, budget,
                                         limits, &alphas);
            j["mode"] = "c0-above";
            j["lambda"] = lambda.str();
        }
        j["verdict"] = verdict_json(v);
        j["alpha_values"] = alphas;
        emit(opt, j, v.str() + "\n");
        return v.halted() ? kExitOk : kExitBudgetExhausted;
    }
    if (*cmd_specker) {
        const auto pred = halt_step ? zec::StepPredicate::halts_at(*halt_step)
                                    : zec::StepPredicate::never();
        const auto x = zec::specker_real(pred);
        const auto v = zec::sign_positive(x, budget);
        json j;
        j["verb"] = "specker-demo";
        j["halt_step"] = halt_step ? json(*halt_step) : json(nullptr);
        j["verdict"] = verdict_json(v);
        json prefix = json::array();
        const long shown = std::min<long>(budget, 12);
        for (long m = 0; m <= shown; ++m) prefix.push_back(x.approximant(m).str());
        j["lambda_prefix"] = prefix;
        std::string human = "lambda_m prefix:";
        for (const auto &s : prefix) human += " " + s.get<std::string>();
        human += "\n";
        if (v.halted()) {
            const long k = v.steps_used();
            human += "halted at k = " + std::to_string(k) + ": lambda_" + std::to_string(k) +
                     " - 2^-" + std::to_string(k) + " = " +
                     (x.approximant(k) - zec::Rational::pow2(-k)).str() + " > 0\n";
            human += "represented real = " + x.approximant(k).str() + "\n";
            j["represented_real"] = x.approximant(k).str();
            j["certificate"] = "lambda_" + std::to_string(k) + " - 2^-" + std::to_string(k) +
                               " = " + (x.approximant(k) - zec::Rational::pow2(-k)).str() + " > 0";
        } else {
            human += "budget exhausted after " + std::to_string(budget) +
                     " steps; every test lambda_k - 2^-k <= 0\n";
            human += halt_step ? "hidden real = 1/2^" + std::to_string(*halt_step) + "\n"
                               : "hidden real = 0 (never revealed to the decider)\n";
            j["represented_real"] =
                halt_step ? "1/2^" + std::to_string(*halt_step) : "0 (never revealed)";
        }
        emit(opt, j, human);
        return v.halted() ? kExitOk : kExitBudgetExhausted;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run_cli(argc, argv);
    } catch (const zec::ToleranceNotReached &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceNotReached;
    } catch (const zec::CapExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const zec::InvalidInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
