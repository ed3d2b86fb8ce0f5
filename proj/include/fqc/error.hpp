#pragma once

#include <stdexcept>
#include <string>

namespace fqc {

// Base of every error raised by the library.  kind() is a stable tag that
// callers and the CLI can print.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define FQC_ERROR(Name)                                                   \
  class Name : public Error {                                             \
   public:                                                                \
    explicit Name(const std::string& what = "") : Error(#Name, what) {}   \
  };

FQC_ERROR(InvalidField)
FQC_ERROR(DivisionByZero)
FQC_ERROR(NotASubfield)
FQC_ERROR(InvalidDegree)
FQC_ERROR(InvalidConstantTerm)
FQC_ERROR(NotCoprime)
FQC_ERROR(NotDivisible)
FQC_ERROR(SizeMismatch)
FQC_ERROR(EmptyInput)
FQC_ERROR(ShapeMismatch)
FQC_ERROR(NotNilpotent)
FQC_ERROR(NotIrreducible)
FQC_ERROR(NotSimilar)
FQC_ERROR(ParseError)
FQC_ERROR(NotRepresentable)
FQC_ERROR(TypeMismatch)
FQC_ERROR(NoWitnessExists)
FQC_ERROR(NotCommuting)
FQC_ERROR(BudgetExceeded)
FQC_ERROR(InternalError)

#undef FQC_ERROR

}  // namespace fqc
