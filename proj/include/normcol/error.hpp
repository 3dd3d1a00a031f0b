#ifndef NORMCOL_ERROR_HPP
#define NORMCOL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace normcol {

enum class ErrorKind {
  Parse,
  Degree,
  Loop,
  InvalidArgument,
  Verification,
  Limit,
};

const char* to_string(ErrorKind kind);

// All failures raised by the library carry a kind so the C boundary can map
// them onto status codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace normcol

#endif  // NORMCOL_ERROR_HPP
