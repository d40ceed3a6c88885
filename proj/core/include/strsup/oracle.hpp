#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "strsup/core.hpp"

namespace strsup::oracle {

/// A ground term body.bot, where every letter is a unary function symbol and
/// bot the only constant.
struct GTerm {
  Str body;

  friend bool operator==(const GTerm&, const GTerm&) = default;
};

/// A literal of a g-clause. Positive ones carry the substitution part w they
/// were instantiated with; negative ones never do.
struct GLiteral {
  bool positive = true;
  GTerm lhs;
  GTerm rhs;
  std::optional<Str> part;

  friend bool operator==(const GLiteral&, const GLiteral&) = default;
};

struct GClause {
  std::vector<GLiteral> literals;

  friend bool operator==(const GClause&, const GClause&) = default;
};

std::string to_string(const GTerm& t, const Precedence& prec);
std::string to_string(const GClause& c, const Precedence& prec);

/// Every word over the alphabet of length <= max_len, shortest first.
std::vector<Str> all_strings(std::size_t alphabet_size, std::size_t max_len);

/// Ground instances of `c`: each positive literal s = t independently becomes
/// s.w.bot = t.w.bot for every |w| <= max_sub_len; negative literals become
/// s.bot != t.bot.
std::vector<GClause> g_instances(const Clause& c, std::size_t max_sub_len, const Precedence& prec);

/// Partition of all words of length <= max_len into congruence classes.
class Partition {
public:
  Partition(std::size_t alphabet_size, std::size_t max_len);

  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t universe_size() const noexcept { return parent_.size(); }
  bool in_universe(const Str& s) const noexcept { return s.size() <= max_len_; }

  std::size_t index(const Str& s) const;
  Str word(std::size_t index) const;

  std::size_t find(std::size_t i) const;
  /// Returns true if two classes were joined.
  bool unite(std::size_t a, std::size_t b);
  bool same(const Str& a, const Str& b) const { return find(index(a)) == find(index(b)); }
  std::size_t class_count() const;

private:
  std::size_t alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;  // index of the first word of each length
  mutable std::vector<std::size_t> parent_;
};

/// Least congruence on words of length <= max_len generated by the Horn
/// clauses `equations`: unconditional equations apply at every embedding
/// u s v within the bound, and a conditional one joins in once all its
/// antecedent pairs share a class. Clauses without a positive literal are
/// ignored. Throws ContractViolation on non-Horn input.
Partition bounded_closure(std::span<const Clause> equations, std::size_t max_len, const Precedence& prec);

enum class Entailment { Yes, NoWithinBound };

/// Yes iff the goal's sides share a class of bounded_closure. One-sided: a
/// NoWithinBound answer is not a refutation.
Entailment entails_bounded(std::span<const Clause> premises, const Literal& goal, std::size_t max_len,
                           const Precedence& prec);

/// Ground entailment check for soundness harnesses: is `target` true in every
/// equality Herbrand model of the g-clauses of `premises`?
///
/// Premise g-clauses are instantiated with substitution parts of length <=
/// part_bound. All but one literal of each instance must be falsified by the
/// negated target; the remaining literal is then forced, and the forced
/// literals together with the negated target are checked for inconsistency by
/// congruence closure over ground terms. A true result is always correct.
bool ground_entails(std::span<const Clause> premises, const GClause& target, std::size_t part_bound);

/// Checks ground_entails for every g-instance of `conclusion` with
/// substitution parts up to `instance_bound`. Returns the first instance that
/// could not be confirmed.
std::optional<GClause> check_entailed(std::span<const Clause> premises, const Clause& conclusion,
                                      std::size_t instance_bound, std::size_t part_bound, const Precedence& prec);

}  // namespace strsup::oracle
