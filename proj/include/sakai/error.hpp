#pragma once

#include <stdexcept>
#include <string>

namespace sakai {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasisMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidRoot : public Error {
 public:
  using Error::Error;
};

/// A birational map was evaluated where one of its denominators vanishes.
/// `denominator()` names the vanishing expression (e.g. "g+t").
class IndeterminatePoint : public Error {
 public:
  IndeterminatePoint(std::string denominator, const std::string& where)
      : Error(where + ": denominator " + denominator + " vanishes"),
        denominator_(std::move(denominator)) {}

  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string denominator_;
};

/// An orbit step hit a pole. Carries the step index when known.
class SingularStep : public Error {
 public:
  SingularStep(std::string denominator, long index, const std::string& where)
      : Error(where + " at index " + std::to_string(index) + ": denominator " +
              denominator + " vanishes"),
        denominator_(std::move(denominator)),
        index_(index) {}

  const std::string& denominator() const noexcept { return denominator_; }
  long index() const noexcept { return index_; }

 private:
  std::string denominator_;
  long index_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class IndexRange : public Error {
 public:
  using Error::Error;
};

class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sakai
