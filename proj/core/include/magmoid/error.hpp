#pragma once

#include <stdexcept>
#include <string>

namespace magmoid {

// Base class for every failure the library reports by throwing.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define MAGMOID_DEFINE_ERROR(NAME)                                            \
  class NAME : public Error {                                                 \
  public:                                                                     \
    using Error::Error;                                                       \
  }

// kernel
MAGMOID_DEFINE_ERROR(MissingAssignment);
MAGMOID_DEFINE_ERROR(DuplicateAssignment);
MAGMOID_DEFINE_ERROR(ForeignElement);
MAGMOID_DEFINE_ERROR(CompositionMismatch);
MAGMOID_DEFINE_ERROR(SizeLimitExceeded);

// categories and instance constructors
MAGMOID_DEFINE_ERROR(MissingDiagonal);
MAGMOID_DEFINE_ERROR(InvalidSpec);
MAGMOID_DEFINE_ERROR(NotNatural);
MAGMOID_DEFINE_ERROR(MissingProjection);
MAGMOID_DEFINE_ERROR(MissingComultiplication);

// theorem verifiers
MAGMOID_DEFINE_ERROR(NotTFree);
MAGMOID_DEFINE_ERROR(NotASection);
MAGMOID_DEFINE_ERROR(NotPointSurjective);
MAGMOID_DEFINE_ERROR(HypothesisFailed);
MAGMOID_DEFINE_ERROR(NotRegularEpi);

// internal homs
MAGMOID_DEFINE_ERROR(NotRepresentable);
MAGMOID_DEFINE_ERROR(NoSolution);
MAGMOID_DEFINE_ERROR(MultipleSolutions);

// parsing / front end
MAGMOID_DEFINE_ERROR(SyntaxError);
MAGMOID_DEFINE_ERROR(InputError);

#undef MAGMOID_DEFINE_ERROR

} // namespace magmoid
