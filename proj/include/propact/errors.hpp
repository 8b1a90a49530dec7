#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace propact {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class InvalidSubsystem : public Error {
 public:
  using Error::Error;
};

class UnknownRealForm : public Error {
 public:
  using Error::Error;
};

class RedundantAbelianVector : public Error {
 public:
  using Error::Error;
};

class NoWall : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class HypothesesNotMet : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the mathematics guarantees did not hold.
class ConsistencyViolation : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(std::uint64_t cap, std::uint64_t required)
      : Error("enumeration cap " + std::to_string(cap) + " exceeded; at least " +
              std::to_string(required) + " elements are required"),
        cap_(cap),
        required_(required) {}

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t cap_;
  std::uint64_t required_;
};

}  // namespace propact
