#ifndef REDUCT_ERRORS_HPP
#define REDUCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reduct {

/// Error taxonomy shared by the library and the CLI exit-code contract:
/// Bounds/Parse -> 2, Internal -> 3, Precondition -> 4, Property -> 5.
enum class ErrorKind { Bounds, Parse, Internal, Precondition, Budget, Property };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

private:
  ErrorKind kind_;
  std::string code_;
};

namespace errors {

[[noreturn]] inline void bounds(const std::string& what) {
  throw Error(ErrorKind::Bounds, "BoundsExceeded", what);
}
[[noreturn]] inline void parse(const std::string& what) {
  throw Error(ErrorKind::Parse, "ParseError", what);
}
[[noreturn]] inline void internal(const std::string& what) {
  throw Error(ErrorKind::Internal, "InternalCheckFailed", what);
}
[[noreturn]] inline void precondition(const std::string& code, const std::string& what) {
  throw Error(ErrorKind::Precondition, code, what);
}
[[noreturn]] inline void budget(const std::string& what) {
  throw Error(ErrorKind::Budget, "BudgetExceeded", what);
}

} // namespace errors

} // namespace reduct

#endif
