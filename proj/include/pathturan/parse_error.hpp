#pragma once

#include <stdexcept>
#include <string>

namespace pathturan {

// Input-file error carrying the 1-based line that caused it.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line) {}
  int line;
};

} // namespace pathturan
