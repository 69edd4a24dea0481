#pragma once

#include <stdexcept>
#include <string>

namespace rv {

// Raised by the text parsers. `position` is a 0-based byte offset into the
// input that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rv
