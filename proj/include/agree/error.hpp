#pragma once

#include <stdexcept>
#include <string>

namespace agree {

/// Raised on any data or validation failure; the message is a single line
/// suitable for verbatim display.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace agree
