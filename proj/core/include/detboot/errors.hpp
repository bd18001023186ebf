#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detboot {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySample : public Error {
public:
    EmptySample() : Error("sample is empty") {}
};

class NonFiniteValue : public Error {
public:
    explicit NonFiniteValue(const std::string& what) : Error(what) {}
};

class InvalidPeriod : public Error {
public:
    explicit InvalidPeriod(const std::string& what) : Error(what) {}
};

class MismatchedGrid : public Error {
public:
    explicit MismatchedGrid(const std::string& what) : Error(what) {}
};

class TotalMassError : public Error {
public:
    explicit TotalMassError(const std::string& what) : Error(what) {}
};

class AlphaOutOfRange : public Error {
public:
    explicit AlphaOutOfRange(const std::string& what) : Error(what) {}
};

class EnumerationTooLarge : public Error {
public:
    explicit EnumerationTooLarge(const std::string& what) : Error(what) {}
};

class BlockLengthMismatch : public Error {
public:
    explicit BlockLengthMismatch(const std::string& what) : Error(what) {}
};

class AllMassDropped : public Error {
public:
    explicit AllMassDropped(const std::string& what) : Error(what) {}
};

class FileNotFound : public Error {
public:
    explicit FileNotFound(const std::string& path) : Error("file not found: " + path) {}
};

/// Parse failure in a sample file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Invalid request-level argument (bad grid size, bad coefficients, ...).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace detboot
