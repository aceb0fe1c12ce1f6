#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace tda {

/// Bad user-supplied data (malformed files, mismatched sizes, out-of-range
/// parameters).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A validated internal invariant failed; indicates a bug or corrupted state
/// rather than bad input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace tda
