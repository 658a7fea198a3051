#pragma once

#include <stdexcept>
#include <string>

namespace divkit {

// An iterative computation ran out of budget before reaching its tolerance.
// Carries the best value seen so far in the message.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace divkit
