#pragma once

#include <stdexcept>
#include <string>

namespace trunctx {

/// Precondition or geometry violation; maps to CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Iterative solver failed to reach its tolerance; maps to CLI exit code 3.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trunctx
