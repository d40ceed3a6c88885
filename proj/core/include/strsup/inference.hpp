#pragma once

#include <optional>
#include <vector>

#include "strsup/core.hpp"

namespace strsup {

/// One conclusion of a generating inference.
///
/// `produced` is the literal the rule creates (absent for Equality
/// Resolution and Factoring). `peak`, when set, is a string that is strictly
/// above both sides of `produced` and is the maximal term of the maximal
/// premise; saturation uses it for the joinability redundancy test.
struct Conclusion {
  Clause clause;
  Rule rule = Rule::Input;
  std::vector<ClauseId> parents;
  std::string detail;
  std::optional<Literal> produced;
  std::optional<Str> peak;
};

/// C v u1u2 = s,  D v u2u3 = t  |-  C v D v u1t = su3
/// Both premises must be free of selected literals.
std::vector<Conclusion> superposition(const Clause& left, const Clause& right, const Precedence& prec);

/// C v u1u2u3 <> s,  D v u2 = t  |-  C v D v u1tu3 <> s
/// A negative target must be the selected literal of `left`; a positive one
/// needs `left` free of selected literals. `right` never has one.
std::vector<Conclusion> rewrite(const Clause& left, const Clause& right, const Precedence& prec);

/// C v s != s  |-  C  when s != s is selected.
std::vector<Conclusion> equality_resolution(const Clause& c, const Precedence& prec);

/// C v s = u1u2,  D v u2u3 = t  |-  C v D v su3 = u1t
/// with s above u1u2, C holding another positive literal, and neither
/// premise holding a selected literal.
std::vector<Conclusion> paramodulation(const Clause& left, const Clause& right, const Precedence& prec);

/// C v s = t v su = tu  |-  C v su = tu  when C has no selected literal.
std::vector<Conclusion> factoring(const Clause& c, const Precedence& prec);

/// Which generating rules a saturation run may use.
struct RuleSet {
  bool superposition = true;
  bool rewrite = true;
  bool equality_resolution = true;
  bool paramodulation = true;
  bool factoring = true;

  static RuleSet all() { return {}; }
  /// Rules needed for Horn theories.
  static RuleSet horn() { return {true, true, true, false, false}; }
};

/// Every inference with `given` as one premise and a clause of `others` as the
/// other (both orders), plus the unary rules on `given`. Include `given` in
/// `others` to get self-inferences. Order is deterministic.
std::vector<Conclusion> all_inferences(const Clause& given, const std::vector<const Clause*>& others,
                                       const RuleSet& rules, const Precedence& prec);

/// Re-run `rule` on `parents` (left premise first).
std::vector<Conclusion> apply_rule(Rule rule, const std::vector<const Clause*>& parents, const Precedence& prec);

}  // namespace strsup
