#pragma once

#include <stdexcept>
#include <string>

namespace zec {

// Error taxonomy. The CLI maps each base class to a distinct exit code:
// InvalidInput -> 2, CapExceeded -> 4, ToleranceNotReached -> 5.
// Budget exhaustion is not an error; it is a Verdict (see verdict.hpp).

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonStochasticRow : InvalidInput {
    int row;
    std::string row_sum;  // exact "p/q" rendering of the offending sum
    NonStochasticRow(int r, std::string sum)
        : InvalidInput("row " + std::to_string(r) + " sums to " + sum + ", expected 1"),
          row(r), row_sum(std::move(sum)) {}
};

struct EntryOutOfRange : InvalidInput {
    int row, col;
    EntryOutOfRange(int r, int c)
        : InvalidInput("entry (" + std::to_string(r) + "," + std::to_string(c) +
                       ") lies outside [0, 1]"),
          row(r), col(c) {}
};

struct AlphabetTooSmall : InvalidInput {
    AlphabetTooSmall(std::string which, long size)
        : InvalidInput(which + " alphabet has size " + std::to_string(size) +
                       ", need at least 2") {}
};

struct NonDyadicThreshold : InvalidInput {
    NonDyadicThreshold(const std::string &detail)
        : InvalidInput("threshold denominator exceeds the certifiable cap: " + detail) {}
};

struct ProductTooLarge : CapExceeded {
    ProductTooLarge(std::size_t vertices, std::size_t cap)
        : CapExceeded("strong product would have " + std::to_string(vertices) +
                      " vertices, cap is " + std::to_string(cap)) {}
};

struct GraphTooLargeForExactCover : CapExceeded {
    GraphTooLargeForExactCover(int vertices, int cap)
        : CapExceeded("exact clique cover limited to " + std::to_string(cap) +
                      " vertices, graph has " + std::to_string(vertices)) {}
};

struct EnumerationCapExceeded : CapExceeded {
    EnumerationCapExceeded(const std::string &detail)
        : CapExceeded("word enumeration cap exceeded: " + detail) {}
};

struct StateCapExceeded : CapExceeded {
    StateCapExceeded(const std::string &detail)
        : CapExceeded("state enumeration cap exceeded: " + detail) {}
};

struct StateSetTooLargeForEnum : CapExceeded {
    StateSetTooLargeForEnum(std::size_t states, std::size_t cap)
        : CapExceeded("symmetrizer enumeration limited to " + std::to_string(cap) +
                      " states, AVC has " + std::to_string(states)) {}
};

struct ToleranceNotReached : std::runtime_error {
    long iterations;
    explicit ToleranceNotReached(long iters)
        : std::runtime_error("tolerance not reached after " + std::to_string(iters) +
                             " iterations"),
          iterations(iters) {}
};

}  // namespace zec
