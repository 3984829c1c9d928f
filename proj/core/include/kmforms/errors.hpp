#pragma once

#include <stdexcept>
#include <string>

namespace kmforms {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible inputs: mixed scales, insufficient depth, unit mismatch.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (wrong constant term, odd characteristic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A claimed identity or integrality failed; the message carries the witness.
class IdentityViolation : public Error {
 public:
  using Error::Error;
};

// A certificate (cone rays, wedge-square matrices) could not be established.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

// A simple-root system violates its construction invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

// Perpendicular imaginary roots off a common isotropic ray.
class UnexpectedGeometry : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line, long offset)
      : Error(what), line_(line), offset_(offset) {}
  long line() const { return line_; }
  long offset() const { return offset_; }

 private:
  long line_;
  long offset_;
};

}  // namespace kmforms
