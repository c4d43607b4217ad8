#pragma once

#include <stdexcept>
#include <string>

namespace wright {

/// Base for violations of a mathematical precondition (bad input for an
/// otherwise well-formed request).
class MathError : public std::runtime_error {
 public:
  MathError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  /// Stable error name, e.g. "NotInAlgebra".
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define WRIGHT_DEFINE_MATH_ERROR(Name)                                  \
  class Name : public MathError {                                      \
   public:                                                             \
    explicit Name(const std::string& what) : MathError(#Name, what) {} \
  };

WRIGHT_DEFINE_MATH_ERROR(NonInvertibleImage)
WRIGHT_DEFINE_MATH_ERROR(ZeroPolynomial)
WRIGHT_DEFINE_MATH_ERROR(SingularMap)
WRIGHT_DEFINE_MATH_ERROR(NotHomogeneousNegative)
WRIGHT_DEFINE_MATH_ERROR(NotInAlgebra)
WRIGHT_DEFINE_MATH_ERROR(ZeroOrConstantInput)
WRIGHT_DEFINE_MATH_ERROR(InvalidSection)
WRIGHT_DEFINE_MATH_ERROR(MismatchedSurface)
WRIGHT_DEFINE_MATH_ERROR(NotAMember)
WRIGHT_DEFINE_MATH_ERROR(InvalidAlgebra)
WRIGHT_DEFINE_MATH_ERROR(InvalidArgument)

#undef WRIGHT_DEFINE_MATH_ERROR

/// Malformed text input (polynomials, rationals, checkpoint files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wright
