#pragma once

#include <cstddef>
#include <vector>

#include "strsup/core.hpp"

namespace strsup {

/// text = u1 ++ pattern ++ u3 with |u1| = start.
struct Occurrence {
  std::size_t start = 0;
  Str u1;
  Str u3;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// left = u1 ++ u2 and right = u2 ++ u3 with u2 non-empty.
struct Overlap {
  Str u1;
  Str u2;
  Str u3;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// KMP failure function: border[i] is the length of the longest proper
/// border of p[0..i].
std::vector<std::size_t> failure_function(const Str& p);

/// All (possibly overlapping) occurrences of a non-empty pattern, ascending.
/// Throws ContractViolation on an empty pattern.
std::vector<Occurrence> occurrences(const Str& pattern, const Str& text);

/// Start positions only; same contract as occurrences().
std::vector<std::size_t> occurrence_starts(const Str& pattern, const Str& text);

/// Every non-empty suffix of `left` that is also a prefix of `right`, by
/// increasing overlap length.
std::vector<Overlap> overlaps(const Str& left, const Str& right);

}  // namespace strsup
