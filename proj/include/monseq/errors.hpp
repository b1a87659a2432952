#pragma once

#include <stdexcept>
#include <string>

namespace monseq {

// Base of every error raised by the solvers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-domain input (illegal board, bad word, duplicate value).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured node or memo cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A strategy was asked for a move in a position it does not cover.
class StrategyError : public Error {
 public:
  using Error::Error;
};

// An internal invariant was violated; indicates a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace monseq
