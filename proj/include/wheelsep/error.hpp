// Copyright (c) wheelsep contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wheelsep {

// Raised when a caller violates an operation's precondition. The message
// names the condition that failed.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a step that the underlying proof guarantees does not hold.
// Carries a dump of the offending state in its message.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace wheelsep
