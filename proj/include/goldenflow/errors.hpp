#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf {

/// Malformed textual input; offset is the byte position of the first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace gf
