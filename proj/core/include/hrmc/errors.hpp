#pragma once

#include <stdexcept>

namespace hrmc {

// Invalid arguments or malformed input (bad ranges, unparsable files,
// mismatched graph/coloring sizes).  Maps to exit code 2 in the CLI.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A requested construction provably cannot exist (e.g. n is at or below
// the feasibility threshold for the given failure count).
struct infeasible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hrmc
