#pragma once

#include <stdexcept>
#include <string>

namespace tiledim {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed arguments that make no sense (bad dimension, axis out of
// range, mismatched ambient dimensions, unknown fixture name).
class UsageError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input (JSON shape, rational literals).
class InputError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates an operation's precondition, e.g. a
// non-generic slicing hyperplane or an improper tiling handed to the
// realizer construction.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Something the theory guarantees did not hold. Either the input was not
// what it claimed to be, or there is a bug.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Random generation gave up after exhausting its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

}  // namespace tiledim
