#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strsup/core.hpp"
#include "strsup/wordproblem.hpp"

namespace strsup {

/// A parsed problem file.
///
///     # comment
///     order a > b > c
///     clause ab = c | ba != eps
///     goal abc = c
struct Problem {
  Precedence precedence;
  std::vector<Clause> clauses;
  std::optional<WordProblem> goal;
};

/// Throws ParseError carrying the offending line number.
Problem parse_problem(std::string_view text);

/// Problem file text that parse_problem reads back to an equal problem.
std::string print_problem(const Problem& p);

/// Input clauses for refutation mode: the clauses plus lhs != rhs for a goal.
std::vector<Clause> refutation_input(const Problem& p);

}  // namespace strsup
