#pragma once

#include <stdexcept>
#include <string>

namespace sinr {

// Bad user input or a violated operation precondition. The CLI maps this
// to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A solver produced output that failed exact re-verification, or a
// proof-backed invariant did not hold. Indicates a bug, never expected.
// The CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LpInfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LpUnboundedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sinr
