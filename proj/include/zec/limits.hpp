#pragma once

#include <cstddef>

namespace zec {

// Resource guardrails. These are configuration, not hard constants: the
// objects here grow exponentially in the block length, so every search is
// gated by an explicit cap. The CLI overrides them from the environment.
struct Limits {
    std::size_t product_cap = 10'000;        // max vertices of a strong product
    int clique_cover_cap = 64;               // max vertices for exact clique cover
    std::size_t enumeration_cap = 1'000'000; // max |X|^n words in code search
    std::size_t state_cap = 10'000;          // max states enumerated from a DMC
    std::size_t symmetrizer_enum_cap = 16;   // max |S| for symmetrizer enumeration
    long threshold_denominator_cap = 4096;   // max q in exact 2^{(p/q) n} tests
    long capacity_max_iterations = 100'000;  // alternating-optimization budget
};

inline const Limits &default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace zec
