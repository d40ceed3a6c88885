#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strsup/core.hpp"

namespace strsup {

/// Simplification: rewrite one occurrence of l in `target` with r, where the
/// unit is l = r with l above r. The occurrence needs a non-empty prefix
/// (l1 != lambda) inside its side; a negative literal must be the selected
/// one. Takes the first eligible (literal, side, position), lhs before rhs.
///
/// Throws ContractViolation if `unit` is not a single oriented equation.
std::optional<Clause> simplify(const Clause& target, const Clause& unit, const Precedence& prec);

/// Multiset inclusion of literals, counting multiplicity.
bool subsumes(const Clause& c, const Clause& d);

/// Holds a positive literal s = s.
bool is_tautology(const Clause& c);

/// Rewrites with a fixed set of oriented unit equations, matching all
/// left-hand sides at once. At each step the occurrence that ends first is
/// replaced (the lowest unit id on ties). Every step decreases in the
/// length-lexicographic order, so this terminates.
class Normalizer {
public:
  Normalizer() = default;
  explicit Normalizer(const std::vector<const Clause*>& units);

  Str operator()(const Str& s) const;

private:
  std::size_t width_ = 0;  // transition table row size
  std::vector<std::uint32_t> delta_;
  std::vector<int> match_;  // unit index recognised at each state, or -1
  std::vector<std::string> lhs_, rhs_;
};

/// One-off normal form; builds a Normalizer.
Str normalize(const Str& s, const std::vector<const Clause*>& units);

}  // namespace strsup
