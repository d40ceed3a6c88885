#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

#include "strsup/core.hpp"

namespace strsup {

enum class Cmp { Less, Equal, Greater };

constexpr Cmp flip(Cmp c) noexcept {
  return c == Cmp::Less ? Cmp::Greater : c == Cmp::Greater ? Cmp::Less : Cmp::Equal;
}

/// Length-lexicographic ordering. Linear in |s| + |t|.
Cmp cmp_str(const Str& s, const Str& t, const Precedence& prec);

/// Multiset extension of a total order `cmp` over T, taken straight from the
/// definition: M > N iff M != N and every x with N(x) > M(x) is dominated by
/// some y > x with M(y) > N(y). Quadratic; meant for clause-sized inputs.
template <class T, class Compare>
Cmp multiset_cmp(std::span<const T> m, std::span<const T> n, Compare cmp) {
  // Distinct elements of m + n with their multiplicities on each side.
  struct Entry {
    const T* elem;
    std::size_t in_m = 0;
    std::size_t in_n = 0;
  };
  std::vector<Entry> entries;
  auto bump = [&](const T& x, bool left) {
    for (auto& e : entries) {
      if (cmp(*e.elem, x) == Cmp::Equal) {
        ++(left ? e.in_m : e.in_n);
        return;
      }
    }
    entries.push_back(Entry{&x, left ? 1u : 0u, left ? 0u : 1u});
  };
  for (const T& x : m) bump(x, true);
  for (const T& x : n) bump(x, false);

  auto dominates = [&](bool m_side) {
    bool differs = false;
    for (const auto& x : entries) {
      std::size_t mine = m_side ? x.in_m : x.in_n;
      std::size_t theirs = m_side ? x.in_n : x.in_m;
      if (mine != theirs) differs = true;
      if (theirs <= mine) continue;
      bool covered = false;
      for (const auto& y : entries) {
        std::size_t y_mine = m_side ? y.in_m : y.in_n;
        std::size_t y_theirs = m_side ? y.in_n : y.in_m;
        if (y_mine > y_theirs && cmp(*y.elem, *x.elem) == Cmp::Greater) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return differs;
  };

  if (dominates(true)) return Cmp::Greater;
  if (dominates(false)) return Cmp::Less;
  assert(std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.in_m == e.in_n; }));
  return Cmp::Equal;
}

/// Literal ordering via the encodings s=t -> {{s},{t}} and s!=t -> {{s,t}}
/// under the two-level multiset extension of cmp_str.
Cmp cmp_literal(const Literal& a, const Literal& b, const Precedence& prec);

/// Multiset extension of cmp_literal.
Cmp cmp_clause(std::span<const Literal> a, std::span<const Literal> b, const Precedence& prec);
inline Cmp cmp_clause(const Clause& a, const Clause& b, const Precedence& prec) {
  return cmp_clause(std::span<const Literal>(a.literals), std::span<const Literal>(b.literals), prec);
}

}  // namespace strsup
