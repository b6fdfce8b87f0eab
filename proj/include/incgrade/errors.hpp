#pragma once

#include <stdexcept>
#include <string>

namespace incgrade {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unreadable files, bad JSON, out-of-range indices, unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

#define INCGRADE_DEFINE_ERROR(Name, Base) \
  class Name : public Base {              \
   public:                                \
    using Base::Base;                     \
  };

// poset
INCGRADE_DEFINE_ERROR(CycleError, InputError)
INCGRADE_DEFINE_ERROR(DuplicateLabelError, InputError)
INCGRADE_DEFINE_ERROR(EmptyPosetError, InputError)
INCGRADE_DEFINE_ERROR(NotComparableError, Error)

// algebra
INCGRADE_DEFINE_ERROR(PosetMismatchError, Error)
INCGRADE_DEFINE_ERROR(NotInvertibleError, Error)
INCGRADE_DEFINE_ERROR(NotMultiplicativeError, Error)
INCGRADE_DEFINE_ERROR(NotAutomorphismError, Error)
INCGRADE_DEFINE_ERROR(DecompositionError, Error)

// grading
INCGRADE_DEFINE_ERROR(InvalidGroupError, InputError)
INCGRADE_DEFINE_ERROR(MismatchError, Error)
INCGRADE_DEFINE_ERROR(BudgetExceededError, Error)
INCGRADE_DEFINE_ERROR(PreconditionError, Error)

// identities
INCGRADE_DEFINE_ERROR(DegreeMismatchError, Error)
INCGRADE_DEFINE_ERROR(CapExceededError, Error)

// linalg
INCGRADE_DEFINE_ERROR(DimensionMismatchError, Error)

#undef INCGRADE_DEFINE_ERROR

}  // namespace incgrade
