#ifndef STONEWORK_ERRORS_HPP_
#define STONEWORK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stonework {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A table, file or expression violates a structural invariant.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  /// A configured size bound would be exceeded.
  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  /// An operation was called outside its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace stonework

#endif  // STONEWORK_ERRORS_HPP_
