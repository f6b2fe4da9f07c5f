#ifndef SIGNRANK_ERRORS_HPP
#define SIGNRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace signrank {

// Base for every failure raised by the library. The CLI maps these onto
// exit codes, so keep them distinct from std::bad_alloc and friends.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SIGNRANK_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

SIGNRANK_DEFINE_ERROR(ContextMismatch);
SIGNRANK_DEFINE_ERROR(PolynomialSignUndefined);
SIGNRANK_DEFINE_ERROR(ZeroPolynomial);
SIGNRANK_DEFINE_ERROR(EndpointIsRoot);
SIGNRANK_DEFINE_ERROR(DivisionByZero);
SIGNRANK_DEFINE_ERROR(ParseError);
SIGNRANK_DEFINE_ERROR(DimensionMismatch);
SIGNRANK_DEFINE_ERROR(OutOfRange);
SIGNRANK_DEFINE_ERROR(ShapeError);
SIGNRANK_DEFINE_ERROR(InvalidStructure);
SIGNRANK_DEFINE_ERROR(NoValidFrame);
SIGNRANK_DEFINE_ERROR(TraceMismatch);
SIGNRANK_DEFINE_ERROR(NoAvoidingLineFound);
SIGNRANK_DEFINE_ERROR(ZeroDenominator);

#undef SIGNRANK_DEFINE_ERROR

// Raised when a polynomial has an irreducible factor of degree >= 3 whose
// roots cannot be decided in Q(sqrt d). The partial answer is never returned.
class UnresolvedFactor : public Error {
 public:
  explicit UnresolvedFactor(int degree)
      : Error("unresolved factor of degree " + std::to_string(degree)), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

}  // namespace signrank

#endif  // SIGNRANK_ERRORS_HPP
