#pragma once

#include <stdexcept>
#include <string>

namespace gausscode {

// Malformed user input: bad tokens, occurrence counts, dimension or
// subset mismatches. CLI maps this to exit code 2.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured enumeration or size limit. CLI exit code 3.
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gausscode
