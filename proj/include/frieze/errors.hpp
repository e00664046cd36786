#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable sets.
struct VarSetMismatch : Error {
    using Error::Error;
};

/// Rejected polygon dissection input: labels out of range, adjacent or
/// duplicate chords, crossing diagonals, malformed JSON.
struct InvalidDissection : Error {
    using Error::Error;
};

/// A size guard on an exponential-cost routine was exceeded.
struct GuardExceeded : Error {
    using Error::Error;
};

/// Input outside a function's mathematical domain: degree of the zero
/// polynomial, inverse of a non-unit, complement of an out-of-cap term.
struct DomainError : Error {
    using Error::Error;
};

} // namespace frieze
