#pragma once

#include <stdexcept>
#include <string>

namespace parkspace {

/// Bad input from a caller: malformed labels, out-of-range parameters.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested group is outside what this build enumerates.
struct UnsupportedGroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal identity failed.  Carries enough context to reproduce.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
    if (!ok) throw VerificationError(what);
}

}  // namespace parkspace
