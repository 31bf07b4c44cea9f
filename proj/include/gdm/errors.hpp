#pragma once

#include <stdexcept>
#include <string>

namespace gdm {

// Bad input: malformed specs, out-of-range vertices, mismatched sizes.
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction was invoked on inputs that violate one of its stated
// hypotheses. The message names the failed hypothesis.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction produced a labeling the verifier rejected, or an exact
// solver reached a state it proved unreachable. Always a bug, never input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace gdm
