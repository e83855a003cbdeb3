#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
  public:
    using Error::Error;
};

class NotSquare : public ShapeMismatch {
  public:
    using ShapeMismatch::ShapeMismatch;
};

class NonFiniteValue : public Error {
  public:
    using Error::Error;
};

class NonHermitianInput : public Error {
  public:
    using Error::Error;
};

class NotAContraction : public Error {
  public:
    using Error::Error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Raised by the matrix file reader; `field` names the offending entry.
class ParseError : public Error {
  public:
    ParseError(std::string field, const std::string& what)
        : Error("field '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

}  // namespace numrad
