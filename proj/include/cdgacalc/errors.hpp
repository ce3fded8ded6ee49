#pragma once

#include <stdexcept>
#include <string>

namespace cdgacalc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or illegal user input: bad expressions, unknown names,
/// fields a preset does not support, k = 0, unreadable spec files.
class InputError : public Error {
public:
    using Error::Error;
};

/// A request outside the certified degree range of a truncated algebra.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// A structural invariant was violated (mixed algebras, non-homogeneous
/// data, a differential that does not square to zero, ...).
class AlgebraError : public Error {
public:
    using Error::Error;
};

}  // namespace cdgacalc
