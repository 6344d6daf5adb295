#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rooted_iso {

// Inputs that violate a precondition (bad word, malformed table, shape
// mismatch between portraits, unparsable JSON, ...).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured bound.  `partial` reports how
// far the enumeration got before giving up (0 if nothing was produced).
class CapacityError : public std::runtime_error {
public:
  CapacityError(const std::string &what, std::uint64_t partial = 0)
      : std::runtime_error(what), partial_size(partial) {}

  std::uint64_t partial_size;
};

// Default guard for layer and group enumerations.
inline constexpr std::uint64_t kDefaultEnumerationBound = 10'000'000;

} // namespace rooted_iso
