#pragma once

#include <stdexcept>
#include <string>

namespace gazekit {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (CSV / JSON). Messages name the offending line when known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A caller broke an operation precondition (bad index, dimension, group mix).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Mismatched grid dimensions or frame counts.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that cannot be processed: empty trace, zero-mass
/// density, dangling passive source reference, quota shortfall.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace gazekit
