#include "zec/avc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zec {

ZeroOneAVC ZeroOneAVC::validate(int input_size, int output_size,
                                std::vector<std::vector<int>> states) {
    if (input_size < 2) throw AlphabetTooSmall("input", input_size);
    if (output_size < 2) throw AlphabetTooSmall("output", output_size);
    if (states.empty()) throw InvalidInput("state set must be non-empty");
    for (const auto &img : states) {
        if (static_cast<int>(img.size()) != input_size)
            throw InvalidInput("state image vector has wrong length");
        for (int y : img)
            if (y < 0 || y >= output_size) throw InvalidInput("state image out of range");
    }
    return ZeroOneAVC(input_size, output_size, std::move(states));
}

ZeroOneAVC::Diagnostics ZeroOneAVC::diagnostics() const {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int s = 0; s < state_count(); ++s) groups[states_[s]].push_back(s);
    Diagnostics d;
    for (auto &[img, idxs] : groups)
        if (idxs.size() >= 2) d.duplicate_groups.push_back(idxs);
    std::sort(d.duplicate_groups.begin(), d.duplicate_groups.end());
    return d;
}

std::vector<int> ZeroOneAVC::reachable_outputs(int x) const {
    std::set<int> m;
    for (const auto &img : states_) m.insert(img[x]);
    return {m.begin(), m.end()};
}

ZeroOneAVC dmc_to_avc(const Channel &w, const Limits &limits) {
    const int in = w.input_size();
    std::vector<std::vector<int>> supports;
    Integer total(1);
    for (int x = 0; x < in; ++x) {
        supports.push_back(w.support(x));
        total *= static_cast<long>(supports.back().size());
        if (total > static_cast<long>(limits.state_cap))
            throw StateCapExceeded("support product exceeds " + std::to_string(limits.state_cap));
    }

    // Odometer over per-row supports, most significant digit first, gives
    // lexicographic image order.
    std::vector<std::vector<int>> states;
    std::vector<std::size_t> pos(in, 0);
    for (;;) {
        std::vector<int> img(in);
        for (int x = 0; x < in; ++x) img[x] = supports[x][pos[x]];
        states.push_back(std::move(img));
        int x = in - 1;
        while (x >= 0 && ++pos[x] == supports[x].size()) pos[x--] = 0;
        if (x < 0) break;
    }
    return ZeroOneAVC::validate(in, w.output_size(), std::move(states));
}

Channel avc_to_dmc(const ZeroOneAVC &avc) {
    const long s = avc.state_count();
    std::vector<std::vector<Rational>> rows(avc.input_size(),
                                            std::vector<Rational>(avc.output_size(), Rational(0)));
    for (int i = 0; i < avc.state_count(); ++i)
        for (int x = 0; x < avc.input_size(); ++x)
            rows[x][avc.map(i, x)] += Rational(1, s);
    return Channel::validate(std::move(rows));
}

Channel graph_to_channel(const Graph &g) {
    const int n = g.vertex_count();
    if (n < 2) throw AlphabetTooSmall("input", n);
    // Output alphabet: singleton letters 0..n-1 then one letter per edge in
    // the graph's sorted edge order.
    const int out = n + static_cast<int>(g.edge_count());
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(out, Rational(0)));
    for (int v = 0; v < n; ++v) rows[v][v] = Rational(1, 1 + g.degree(v));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [u, v] = g.edges()[e];
        rows[u][n + static_cast<int>(e)] = Rational(1, 1 + g.degree(u));
        rows[v][n + static_cast<int>(e)] = Rational(1, 1 + g.degree(v));
    }
    return Channel::validate(std::move(rows));
}

bool cmax_is_zero(const ZeroOneAVC &avc) {
    std::vector<std::vector<int>> m;
    for (int x = 0; x < avc.input_size(); ++x) m.push_back(avc.reachable_outputs(x));
    for (std::size_t a = 0; a < m.size(); ++a) {
        for (std::size_t b = a + 1; b < m.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(m[a].begin(), m[a].end(), m[b].begin(), m[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) return false;
        }
    }
    return true;
}

}  // namespace zec
