#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strsup/core.hpp"
#include "strsup/saturation.hpp"

namespace strsup {

/// Does the theory entail lhs = rhs?
struct WordProblem {
  Str lhs;
  Str rhs;
};

/// The goal lhs != rhs of a word problem, as an ordered pair with the larger
/// side first.
struct Goal {
  Str lhs;
  Str rhs;

  static Goal make(Str a, Str b, const Precedence& prec);
  bool closed() const noexcept { return lhs == rhs; }
  Literal literal(const Precedence& prec) const { return Literal::neq(lhs, rhs, prec); }

  friend bool operator==(const Goal&, const Goal&) = default;
};

enum class Verdict { Entailed, NotEntailed, Unknown };

struct Decision {
  Verdict verdict = Verdict::Unknown;
  /// Entailed: goals from the initial one down to some u != u.
  std::vector<Goal> chain;
  /// Number of distinct goals visited.
  std::size_t explored = 0;
  /// prove_word only: the saturation run behind the decision.
  std::optional<SaturationResult> saturation;
};

/// All goals reachable from `start` by Rewrite with the given oriented unit
/// equations, each with the goal it was derived from.
class GoalClosure {
public:
  GoalClosure(const Goal& start, const std::vector<const Clause*>& units, const Precedence& prec);

  bool contains(const Goal& g) const;
  std::size_t size() const noexcept { return goals_.size(); }
  const std::vector<Goal>& goals() const noexcept { return goals_; }
  /// First closed goal found in breadth-first order.
  std::optional<std::size_t> closed_index() const noexcept { return closed_; }
  /// Path from the start goal to goals()[index].
  std::vector<Goal> chain_to(std::size_t index) const;

private:
  std::vector<Goal> goals_;
  std::vector<std::size_t> parent_;
  std::optional<std::size_t> closed_;
};

/// The oriented unit equations of `clauses`. Throws ContractViolation unless
/// every clause is Horn.
std::vector<const Clause*> horn_units(const std::vector<Clause>& clauses);

/// Decides a word problem against a Horn set that is already saturated.
Decision decide_word(const std::vector<Clause>& saturated, const WordProblem& wp, const Precedence& prec);

/// Saturates a Horn theory with Superposition, Rewrite and Equality
/// Resolution, then calls decide_word. Unknown when the limits are hit.
Decision prove_word(const std::vector<Clause>& theory, const WordProblem& wp, const Precedence& prec,
                    const Limits& limits = {});

/// Saturation of a Horn theory as used by prove_word.
SaturationResult saturate_horn(const std::vector<Clause>& theory, const Precedence& prec, const Limits& limits = {});

}  // namespace strsup
