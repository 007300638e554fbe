#ifndef SGSIZE_ERROR_HPP_
#define SGSIZE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sgsize {

  // Base class for every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A requested size exceeds a hard cap (ground set, order, horizon).
  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  // An input does not satisfy the hypothesis an operation requires, e.g. a
  // family that is not a stack where one is needed.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text, JSON or binary input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace sgsize

#endif  // SGSIZE_ERROR_HPP_
