#pragma once

#include <stdexcept>
#include <string>

namespace mlap {

/// Raised when a request exceeds what the built-in machinery can do (as
/// opposed to being malformed).
class capability_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a floating-point solve is too ill-conditioned to trust.
class conditioning_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mlap
