#pragma once

#include <stdexcept>
#include <string>

namespace oneloop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands live in different number fields") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NonSquare : Error {
  NonSquare() : Error("matrix is not square") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct InvalidTriangulation : Error {
  explicit InvalidTriangulation(const std::string& what)
      : Error("invalid triangulation: " + what) {}
};

struct NotFlippable : Error {
  explicit NotFlippable(int edge)
      : Error("edge " + std::to_string(edge) + " is not flippable") {}
};

struct InvalidIsometry : Error {
  explicit InvalidIsometry(const std::string& what)
      : Error("invalid isometry: " + what) {}
};

struct ClosureMismatch : Error {
  explicit ClosureMismatch(const std::string& what)
      : Error("closure mismatch: " + what) {}
};

struct InvalidCocycle : Error {
  explicit InvalidCocycle(const std::string& what)
      : Error("invalid cocycle: " + what) {}
};

struct DegenerateAssignment : Error {
  explicit DegenerateAssignment(const std::string& what)
      : Error("degenerate Ptolemy assignment: " + what) {}
};

struct ResidualNonzero : Error {
  explicit ResidualNonzero(const std::string& what)
      : Error("closure residual is nonzero: " + what) {}
};

struct ZeroScalar : Error {
  ZeroScalar() : Error("scaling by zero is not allowed") {}
};

}  // namespace oneloop
