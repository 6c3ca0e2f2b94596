#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biofab {

// Base of every error raised by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyGraph : public Error {
public:
    EmptyGraph() : Error("graph has no vertices") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegenerateMatrix : public Error {
public:
    using Error::Error;
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

class TooLargeForExhaustive : public Error {
public:
    explicit TooLargeForExhaustive(std::size_t n)
        : Error("exhaustive ordering supports n <= 10, got n = " + std::to_string(n)) {}
};

class MalformedTour : public Error {
public:
    using Error::Error;
};

class TourLengthMismatch : public Error {
public:
    using Error::Error;
};

class PatternOutOfBounds : public Error {
public:
    using Error::Error;
};

class OverlapDetected : public Error {
public:
    using Error::Error;
};

}  // namespace biofab
