#pragma once

#include <stdexcept>
#include <string>

namespace holonorm {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NoSuchRoot : public Error {
public:
    using Error::Error;
};

} // namespace holonorm
