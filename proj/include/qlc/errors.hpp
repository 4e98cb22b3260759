#pragma once

#include <stdexcept>
#include <string>

namespace qlc {

/// Thrown when an exact enumeration would exceed the configured cap.
/// Caps are hard limits: nothing in the library falls back to sampling silently.
class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a typical set required for a codebook construction is empty.
class empty_typical_set : public std::runtime_error {
 public:
  explicit empty_typical_set(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration file or inconsistent parameter combination.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlc
