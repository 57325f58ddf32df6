#pragma once

#include <stdexcept>
#include <string>

namespace fpart {

/// Malformed or inconsistent input (shape mismatch, overlapping blocks, bad JSON payload).
class invalid_input : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or expansion would exceed a configured size limit.
class guard_exceeded : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// An exact identity that must hold did not (e.g. a MacWilliams result that is not an integer).
class verification_failure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace fpart
