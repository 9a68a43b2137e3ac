#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace axialkit {

// Malformed input text. line is 1-based, 0 when not tied to a line; field
// names the offending JSON path or keyword when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::string field = {})
      : std::runtime_error(format(message, line, field)), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(const std::string& message, std::size_t line, const std::string& field) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += field + ": ";
    return out + message;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace axialkit
