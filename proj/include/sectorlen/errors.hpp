#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sectorlen {

/// Malformed input text (graph6, edge lists, generator files, JSON).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  explicit parse_error(const std::string& what)
      : std::runtime_error(what), offset_(0) {}
  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An enumeration would exceed the configured size caps.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check on an SLD/graph pair failed.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sectorlen
