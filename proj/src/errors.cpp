#include "ttone/errors.hpp"

#include <utility>

namespace ttone {

Error::Error(ErrorKind kind, std::string code, const std::string& message)
    : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

void fail(ErrorKind kind, const std::string& code, const std::string& message) {
  throw Error(kind, code, message);
}

}  // namespace ttone
