#pragma once

#include <stdexcept>
#include <string>

namespace taut {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration budget (word count, chord count, tree count)
// would be exceeded.  Deliberate hard stop, never a silent truncation.
struct BudgetError : Error {
    using Error::Error;
};

// Caller passed arguments outside an operation's domain.
struct InvalidInput : Error {
    using Error::Error;
};

// A consistency check that should be unreachable failed; indicates a bug,
// not a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace taut
