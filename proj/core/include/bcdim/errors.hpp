#pragma once

#include <stdexcept>
#include <string>

namespace bcdim {

// Malformed input or a violated precondition (wrong parity, non-squarefree
// level, degenerate compositum, ...).
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Well-formed input that falls outside the supported range, e.g. anything
// wildly ramified (quadratic ramification at p = 2).
struct unsupported_input : std::invalid_argument {
    explicit unsupported_input(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bcdim
