#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rooted_iso {

/// Generating function P(t)/Q(t) of a series, with integer coefficients,
/// content 1, and Q(0) > 0.  Coefficient i multiplies t^i.
struct RationalFit {
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;

  friend bool operator==(const RationalFit &, const RationalFit &) = default;
};

// Shortest linear recurrence over the rationals satisfied by the whole
// prefix (exact arithmetic throughout, no floating point).  Returns the
// generating function when a recurrence of order <= floor(N/2) fits, where
// N is the last index of the series; nullopt otherwise.  Requires N >= 4.
std::optional<RationalFit>
detect_rational(const std::vector<std::uint64_t> &series);

} // namespace rooted_iso
