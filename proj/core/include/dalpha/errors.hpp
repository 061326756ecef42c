#pragma once

#include <stdexcept>
#include <string>

namespace dalpha {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A loop, an out-of-range endpoint, or an otherwise malformed arc.
class InvalidArc : public Error {
public:
    using Error::Error;
};

/// Arc addition requested for an arc that is already present.
class ArcExists : public Error {
public:
    using Error::Error;
};

/// An operation requiring strong connectivity was given a digraph
/// with an unreachable ordered pair.
class NotStronglyConnected : public Error {
public:
    using Error::Error;
};

/// Exact-search or enumeration size cap exceeded.
class SizeCap : public Error {
public:
    using Error::Error;
};

/// alpha outside [0, 1).
class InvalidAlpha : public Error {
public:
    using Error::Error;
};

/// Family or command parameters violate their constraints.
class InvalidParams : public Error {
public:
    using Error::Error;
};

/// Iterative eigensolver failed to reach tolerance within its cap.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// An exhaustive scan was asked for an invariant class with no members.
class EmptyClass : public Error {
public:
    using Error::Error;
};

/// Closed-form radicand went negative; signals a parameter-validation
/// bug, never raised for inputs that pass validation.
class NegativeRadicand : public Error {
public:
    using Error::Error;
};

/// Malformed digraph text input (bad header, bad token, duplicate arc).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dalpha
