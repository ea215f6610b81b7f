/// @file error.hpp
/// @brief Exception types shared by all pricing modules.

#pragma once

#include <stdexcept>
#include <string>

namespace cio {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or malformed input (bad arguments, broken scenario file).
class InputError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to produce an answer.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// No intensity in the admissible range reprices the spot index.
class CalibrationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Target option price lies outside the attainable range.
class InversionError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace detail

}  // namespace cio
