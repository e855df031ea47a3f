#pragma once

#include <stdexcept>
#include <string>

namespace laver {

// Argument outside an operation's defined range (p = 0 where p >= 1 is
// required, a star element outside [1, 2^n], theta of 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The 62-bit element bound, or a configured resource budget (demand steps,
// row materialization size), was exceeded.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A store file failed validation: bad magic, unsupported version,
// truncation, or checksum mismatch.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a term or partition expression; `position` is the byte
// offset of the offending token.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at offset " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace laver
