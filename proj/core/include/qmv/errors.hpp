#ifndef QMV_ERRORS_HPP
#define QMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element was combined with a quantale (or space) it does not belong to.
struct MismatchError : Error {
  explicit MismatchError(const std::string& what) : Error("mismatch: " + what) {}
};

/// A construction table (or a search that a theorem guarantees to succeed)
/// violates a required law; the message carries a witness.
struct LawViolation : Error {
  explicit LawViolation(const std::string& what) : Error("law violation: " + what) {}
};

/// An analytic instance has no implemented closed form for the request.
struct UnsupportedOperation : Error {
  explicit UnsupportedOperation(const std::string& what) : Error("unsupported: " + what) {}
};

/// An enumeration size guard was exceeded.
struct GuardExceeded : Error {
  explicit GuardExceeded(const std::string& what) : Error("size guard exceeded: " + what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error("precondition: " + what) {}
};

} // namespace qmv

#endif
