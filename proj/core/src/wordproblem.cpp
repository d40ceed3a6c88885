#include "strsup/wordproblem.hpp"

#include <deque>
#include <unordered_map>

#include "strsup/errors.hpp"
#include "strsup/ordering.hpp"
#include "strsup/strmatch.hpp"

namespace strsup {

Goal Goal::make(Str a, Str b, const Precedence& prec) {
  if (cmp_str(a, b, prec) == Cmp::Less) std::swap(a, b);
  return Goal{std::move(a), std::move(b)};
}

namespace {

std::string goal_key(const Goal& g) { return std::to_string(g.lhs.size()) + ':' + g.lhs.ids() + g.rhs.ids(); }

}  // namespace

GoalClosure::GoalClosure(const Goal& start, const std::vector<const Clause*>& units, const Precedence& prec) {
  std::unordered_map<std::string, std::size_t> seen;
  auto visit = [&](Goal g, std::size_t parent) {
    auto [it, inserted] = seen.emplace(goal_key(g), goals_.size());
    if (!inserted) return;
    if (g.closed() && !closed_) closed_ = goals_.size();
    goals_.push_back(std::move(g));
    parent_.push_back(parent);
  };
  visit(start, static_cast<std::size_t>(-1));

  // Breadth-first over every unit at every position of both sides.
  for (std::size_t next = 0; next < goals_.size(); ++next) {
    for (const Clause* u : units) {
      const Str& l = u->literals[0].lhs();
      const Str& r = u->literals[0].rhs();
      for (int side = 0; side < 2; ++side) {
        const Str text = side == 0 ? goals_[next].lhs : goals_[next].rhs;
        const Str other = side == 0 ? goals_[next].rhs : goals_[next].lhs;
        if (l.size() > text.size()) continue;
        for (std::size_t pos : occurrence_starts(l, text))
          visit(Goal::make(text.replaced(pos, l.size(), r), other, prec), next);
      }
    }
  }
}

bool GoalClosure::contains(const Goal& g) const {
  for (const auto& x : goals_)
    if (x == g) return true;
  return false;
}

std::vector<Goal> GoalClosure::chain_to(std::size_t index) const {
  std::vector<Goal> out;
  for (std::size_t i = index; i != static_cast<std::size_t>(-1); i = parent_[i]) out.push_back(goals_[i]);
  return {out.rbegin(), out.rend()};
}

std::vector<const Clause*> horn_units(const std::vector<Clause>& clauses) {
  std::vector<const Clause*> units;
  for (const auto& c : clauses) {
    if (!c.is_horn()) throw ContractViolation("word problems need a Horn theory; clause " + std::to_string(c.id) +
                                              " has several positive literals");
    if (c.is_unit_equation()) units.push_back(&c);
  }
  return units;
}

Decision decide_word(const std::vector<Clause>& saturated, const WordProblem& wp, const Precedence& prec) {
  auto units = horn_units(saturated);
  GoalClosure closure(Goal::make(wp.lhs, wp.rhs, prec), units, prec);
  Decision d;
  d.explored = closure.size();
  if (auto idx = closure.closed_index()) {
    d.verdict = Verdict::Entailed;
    d.chain = closure.chain_to(*idx);
  } else {
    d.verdict = Verdict::NotEntailed;
  }
  return d;
}

SaturationResult saturate_horn(const std::vector<Clause>& theory, const Precedence& prec, const Limits& limits) {
  for (const auto& c : theory)
    if (!c.is_horn()) throw ContractViolation("saturate_horn: theory is not Horn");
  SaturationOptions opts;
  opts.rules = RuleSet::horn();
  return saturate(theory, prec, limits, opts);
}

Decision prove_word(const std::vector<Clause>& theory, const WordProblem& wp, const Precedence& prec,
                    const Limits& limits) {
  SaturationResult sat = saturate_horn(theory, prec, limits);
  Decision d;
  switch (sat.status) {
    case SaturationStatus::LimitReached:
      d.verdict = Verdict::Unknown;
      break;
    case SaturationStatus::Refuted:
      // Only possible with a headless clause in the theory; an inconsistent
      // theory entails every equation.
      d.verdict = Verdict::Entailed;
      break;
    case SaturationStatus::Saturated:
      d = decide_word(sat.clauses, wp, prec);
      break;
  }
  d.saturation = std::move(sat);
  return d;
}

}  // namespace strsup
