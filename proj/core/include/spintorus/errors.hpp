#pragma once

#include <stdexcept>
#include <string>

namespace spintorus {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand sizes disagree (operator vs vector, site index out of range, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A ChainSpec / RParams invariant is violated. The message names the invariant.
class SpecError : public Error {
 public:
  using Error::Error;
};

// A formula was evaluated at (or numerically at) one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Commuting-family or eigen-decomposition preconditions failed.
class EigenError : public Error {
 public:
  using Error::Error;
};

// A basis label violates its ordering/distinctness conditions.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Two independent determinations of the same quantity disagree.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace spintorus
