#pragma once

#include <stdexcept>
#include <string>

namespace rlk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what) : Error("field mismatch: " + what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct ExhaustedField : Error {
  ExhaustedField() : Error("excluded set covers the whole field") {}
};

struct InvalidStructure : Error {
  explicit InvalidStructure(const std::string& what) : Error(what) {}
};

struct NotSkew : Error {
  NotSkew() : Error("bilinear form is not skew-symmetric") {}
};

struct Degenerate : Error {
  Degenerate() : Error("matrix is singular") {}
};

struct DualNotLeibniz : Error {
  DualNotLeibniz() : Error("dual bracket does not satisfy the Leibniz identity") {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what) : Error("operator not invertible: " + what) {}
};

struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace rlk
