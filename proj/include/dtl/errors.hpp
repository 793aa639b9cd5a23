#ifndef DTL_ERRORS_HPP
#define DTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dtl {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Space, degree or dimension mismatch between operands.
struct ShapeError : Error {
  using Error::Error;
};

// Variable index outside the bounds of its space.
struct BoundsError : Error {
  using Error::Error;
};

// Input outside an operation's domain (zero divisor, bad rank, ...).
struct DomainError : Error {
  using Error::Error;
};

// An expansion would exceed the configured term cap.
struct ResourceError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, never bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dtl

#endif
