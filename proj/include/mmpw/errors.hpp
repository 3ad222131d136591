#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace mmpw {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidCone : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SupportMismatch : public Error {
 public:
  using Error::Error;
};

/// A query point lies outside the support cone. Distinct from a value of 0.
class OutsideSupport : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InconsistentInput : public Error {
 public:
  using Error::Error;
};

class MissingNefData : public Error {
 public:
  MissingNefData(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  /// 1-based chamber position whose model lacks nef data (0 when not tied to a chamber).
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace mmpw
