#pragma once

#include <stdexcept>
#include <string>

namespace modquality {

// Base class for all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed fact-file syntax. Carries the parser's position message.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Structurally well-formed input that violates a model invariant
// (dangling class reference, empty module, missing scheme assignment).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error("not found: " + msg) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& msg) : Error("invalid argument: " + msg) {}
};

}  // namespace modquality
