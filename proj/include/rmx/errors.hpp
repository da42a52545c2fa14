#pragma once

#include <stdexcept>
#include <string>

namespace rmx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter or input lies outside the admissible domain. field() names it.
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Repeated or near-repeated eigenvalues where a strict ordering is required.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not available for this algebra or family.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmx
