#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmon {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table is malformed: wrong arity, out-of-range entry, missing structure.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive construction or sweep would exceed the configured caps.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// The input claims to be a C-monoid (or C-set) but a derived object the
/// theory guarantees to exist (an equivalence, a well-defined map) is not.
class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

/// Two pairs of sets over different ground sets were combined.
class GroundMismatch : public Error {
 public:
  using Error::Error;
};

/// Term or model-file syntax error. `position` is a byte offset for terms
/// and a 1-based line number for model files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation of a term failed (unbound variable, symbol unsupported by model).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cmon
