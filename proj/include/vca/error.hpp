#pragma once

#include <stdexcept>
#include <string>

namespace vca {

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A certified computation failed its own verification. Any instance of
/// this is a bug in the engine, never a property of the input.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace vca
