#pragma once

#include <stdexcept>
#include <string>

namespace kottwitz {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input (bad type label, wrong dimension, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

// An operation was called outside its documented domain.
struct PreconditionError : Error {
  using Error::Error;
};

// A realizable Newton point needs a denominator the configured bound does not cover.
struct DenominatorBoundError : Error {
  using Error::Error;
};

struct OrbitCapExceeded : Error {
  using Error::Error;
};

// Rank/degree bookkeeping does not match; distinct from a negative answer.
struct RankDegreeMismatch : Error {
  using Error::Error;
};

// Something that the mathematics guarantees failed to happen: a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace kottwitz
