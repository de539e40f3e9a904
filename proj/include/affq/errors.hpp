#pragma once

#include <stdexcept>
#include <string>

namespace affq {

/// Base class for all library errors raised on bad inputs.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrimeError : public Error {
public:
    explicit NotPrimeError(const std::string& what) : Error(what) {}
};

class NotIrreducibleError : public Error {
public:
    explicit NotIrreducibleError(const std::string& what) : Error(what) {}
};

class SpecMismatchError : public Error {
public:
    explicit SpecMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what) {}
};

class NotADivisorError : public Error {
public:
    explicit NotADivisorError(const std::string& what) : Error(what) {}
};

class ParamMismatchError : public Error {
public:
    explicit ParamMismatchError(const std::string& what) : Error(what) {}
};

class NoSuchElementError : public Error {
public:
    explicit NoSuchElementError(const std::string& what) : Error(what) {}
};

class NotSolvableError : public Error {
public:
    explicit NotSolvableError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Raised when an always-on internal consistency check fails (a bug, not bad input):
/// e.g. a closed-form kernel whose dimension disagrees with the predicted cardinality.
class InternalCheckError : public std::logic_error {
public:
    explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace affq
