#pragma once

#include <vector>

#include "zec/channel.hpp"
#include "zec/graph.hpp"
#include "zec/limits.hpp"

namespace zec {

// Finite family of deterministic (0-1) channels over a common alphabet pair,
// indexed by a state set. Each state is the image vector of a total map
// X -> Y; states[s][x] is the output letter the adversary forces in state s.
// Duplicate states are legal (they are redundant but harmless) and surfaced
// through diagnostics().
class ZeroOneAVC {
public:
    static ZeroOneAVC validate(int input_size, int output_size,
                               std::vector<std::vector<int>> states);

    int input_size() const { return input_size_; }
    int output_size() const { return output_size_; }
    int state_count() const { return static_cast<int>(states_.size()); }
    const std::vector<std::vector<int>> &states() const { return states_; }
    int map(int s, int x) const { return states_[s][x]; }

    struct Diagnostics {
        // Groups of state indices sharing one image vector, only groups of
        // size >= 2; each group ascending, groups ordered by first index.
        std::vector<std::vector<int>> duplicate_groups;
    };
    Diagnostics diagnostics() const;

    // M(x): outputs reachable from x across all states, ascending.
    std::vector<int> reachable_outputs(int x) const;

    friend bool operator==(const ZeroOneAVC &a, const ZeroOneAVC &b) {
        return a.input_size_ == b.input_size_ && a.output_size_ == b.output_size_ &&
               a.states_ == b.states_;
    }

private:
    ZeroOneAVC(int in, int out, std::vector<std::vector<int>> states)
        : input_size_(in), output_size_(out), states_(std::move(states)) {}

    int input_size_;
    int output_size_;
    std::vector<std::vector<int>> states_;
};

// All deterministic maps sigma with W(sigma(x)|x) > 0 for every x, i.e. the
// 0-1 matrices supported inside supp(W), enumerated in lexicographic image
// order. The n-letter supports of the AVC and of W then coincide exactly.
ZeroOneAVC dmc_to_avc(const Channel &w, const Limits &limits = default_limits());

// Uniform state mixture W*(y|x) = |{s : sigma_s(x) = y}| / |S|, an exact
// row-stochastic channel with the same n-letter support structure.
Channel avc_to_dmc(const ZeroOneAVC &avc);

// Channel whose confusability graph is exactly G: outputs are the singletons
// {v} (in vertex order) followed by the edges (sorted), and row v spreads
// 1/(1+deg(v)) over {v}'s own singleton and its incident edges.
Channel graph_to_channel(const Graph &g);

// Decidable zero test for the maximum-error capacity of a 0-1 AVC: true iff
// every pair of reachable-output sets M(x), M(x') intersects.
bool cmax_is_zero(const ZeroOneAVC &avc);

}  // namespace zec
