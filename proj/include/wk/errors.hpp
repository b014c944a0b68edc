#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word contains a symbol outside the machine's alphabet.
class InputError : public Error {
 public:
  using Error::Error;
};

// An automaton or grammar value violates its own invariants.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (wrong model, non-normal
// grammar, lambda-moves where none are allowed, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wk
