#pragma once

#include <stdexcept>
#include <string>

namespace hk {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  AlreadyExtended,
  ZeroDiscriminant,
  ParseError,
  DimensionMismatch,
  NotAnAlgebra,
  SingularAntipode,
  NotASubcoalgebra,
  NotOverKp,
  MissingGrouplikeUnits,
  FiltrationNotExhaustive,
  BadWitness,
  NotACocycle,
  GammaNotPrimitiveFourthRoot,
  NotModuleAlgebra,
  CoactionUnsolvable,
  UnsupportedDimension,
  NotSemisimple,
  NeedsFieldExtension,
  NotGeneratedInDegreeZero,
  InvalidKind,
  NonlinearResidue,
  InvalidInput,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by simple_modules when the splitting field is too small.
// `discriminant` is a scalar literal whose square root is missing.
class NeedsExtension : public Error {
 public:
  NeedsExtension(const std::string& discriminant, const std::string& what)
      : Error(ErrorKind::NeedsFieldExtension, what + " (adjoin sqrt of " + discriminant + ")"),
        discriminant_(discriminant) {}
  const std::string& discriminant() const { return discriminant_; }

 private:
  std::string discriminant_;
};

}  // namespace hk
