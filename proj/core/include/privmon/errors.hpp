#pragma once

#include <stdexcept>
#include <string>

namespace privmon {

// Bad user input: grammar violations, malformed files, capacity overruns.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

// Peer misbehaviour or desync during a two-party session.
class ProtocolError : public std::runtime_error {
public:
  explicit ProtocolError(const std::string &msg) : std::runtime_error(msg) {}
};

// Transport and filesystem failures.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

// Syntax error in a formula string; carries the character offset.
class ParseError : public ValidationError {
public:
  ParseError(const std::string &msg, size_t position)
      : ValidationError(msg + " at position " + std::to_string(position)),
        pos(position) {}
  size_t pos;
};

} // namespace privmon
