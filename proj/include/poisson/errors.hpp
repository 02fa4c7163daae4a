#pragma once

#include <stdexcept>
#include <string>

namespace poisson {

/// Base for every domain error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POISSON_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

POISSON_DEFINE_ERROR(NegativeExponentComposition);
POISSON_DEFINE_ERROR(DivisionByZero);
POISSON_DEFINE_ERROR(MissingVariable);
POISSON_DEFINE_ERROR(ParseError);
POISSON_DEFINE_ERROR(LoopPresent);
POISSON_DEFINE_ERROR(NotAFlat);
POISSON_DEFINE_ERROR(ScaleExceeded);
POISSON_DEFINE_ERROR(SizeMismatch);
POISSON_DEFINE_ERROR(UnsupportedType);
POISSON_DEFINE_ERROR(UnknownCharacter);
POISSON_DEFINE_ERROR(NonPolynomialResult);
POISSON_DEFINE_ERROR(InconsistentWeight);
POISSON_DEFINE_ERROR(UnknownCorpus);
POISSON_DEFINE_ERROR(InternalInconsistency);

#undef POISSON_DEFINE_ERROR

}  // namespace poisson
