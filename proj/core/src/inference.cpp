#include "strsup/inference.hpp"

#include <algorithm>

#include "strsup/errors.hpp"
#include "strsup/ordering.hpp"
#include "strsup/strmatch.hpp"

namespace strsup {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// (left - skip_left) + (right - skip_right) + extra
Clause combine(const Clause& left, std::size_t skip_left, const Clause* right, std::size_t skip_right,
               std::optional<Literal> extra, const Precedence& prec) {
  std::vector<Literal> lits;
  lits.reserve(left.size() + (right ? right->size() : 0) + 1);
  for (std::size_t i = 0; i < left.size(); ++i)
    if (i != skip_left) lits.push_back(left.literals[i]);
  if (right) {
    for (std::size_t j = 0; j < right->size(); ++j)
      if (j != skip_right) lits.push_back(right->literals[j]);
  }
  if (extra) lits.push_back(*extra);
  return make_clause(std::move(lits), prec);
}

std::string overlap_detail(const Overlap& o, const Precedence& prec) {
  return "u1=" + to_string(o.u1, prec) + " u2=" + to_string(o.u2, prec) + " u3=" + to_string(o.u3, prec);
}

bool free_of_selection(const Clause& c) { return !c.has_negative(); }

}  // namespace

std::vector<Conclusion> superposition(const Clause& left, const Clause& right, const Precedence& prec) {
  std::vector<Conclusion> out;
  if (!free_of_selection(left) || !free_of_selection(right)) return out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Literal& l = left.literals[i];
    if (!l.oriented()) continue;  // u1u2 > s
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Literal& r = right.literals[j];
      if (!r.oriented()) continue;  // u2u3 > t
      for (const Overlap& o : overlaps(l.lhs(), r.lhs())) {
        Literal produced = Literal::eq(o.u1 + r.rhs(), l.rhs() + o.u3, prec);
        Conclusion c;
        c.clause = combine(left, i, &right, j, produced, prec);
        c.rule = Rule::Superposition;
        c.parents = {left.id, right.id};
        c.detail = overlap_detail(o, prec);
        c.produced = produced;
        c.peak = l.lhs() + o.u3;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<Conclusion> rewrite(const Clause& left, const Clause& right, const Precedence& prec) {
  std::vector<Conclusion> out;
  if (!free_of_selection(right)) return out;
  auto sel = selected_literal(left, prec);
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Literal& target = left.literals[i];
    if (target.negative() ? (sel.selected != i) : sel.selected.has_value()) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Literal& eq = right.literals[j];
      if (!eq.oriented()) continue;  // u2 > t
      for (int side = 0; side < 2; ++side) {
        if (side == 1 && !target.oriented()) break;
        const Str& text = side == 0 ? target.lhs() : target.rhs();
        const Str& other = side == 0 ? target.rhs() : target.lhs();
        if (eq.lhs().size() > text.size()) continue;
        for (std::size_t pos : occurrence_starts(eq.lhs(), text)) {
          Literal produced = Literal::make(target.positive(), text.replaced(pos, eq.lhs().size(), eq.rhs()), other, prec);
          Conclusion c;
          c.clause = combine(left, i, &right, j, produced, prec);
          c.rule = Rule::Rewrite;
          c.parents = {left.id, right.id};
          c.detail = std::string(side == 0 ? "lhs" : "rhs") + "@" + std::to_string(pos) + " of literal " +
                     std::to_string(i);
          c.produced = produced;
          if (target.positive() && side == 0) c.peak = text;
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

std::vector<Conclusion> equality_resolution(const Clause& c, const Precedence& prec) {
  std::vector<Conclusion> out;
  auto sel = selected_literal(c, prec);
  if (!sel) return out;
  const Literal& l = c.literals[*sel.selected];
  if (l.lhs() != l.rhs()) return out;
  Conclusion r;
  r.clause = combine(c, *sel.selected, nullptr, kNone, std::nullopt, prec);
  r.rule = Rule::EqualityResolution;
  r.parents = {c.id};
  r.detail = "literal " + std::to_string(*sel.selected);
  out.push_back(std::move(r));
  return out;
}

std::vector<Conclusion> paramodulation(const Clause& left, const Clause& right, const Precedence& prec) {
  std::vector<Conclusion> out;
  if (!free_of_selection(left) || !free_of_selection(right)) return out;
  if (left.count_positive() < 2) return out;  // C needs a positive literal
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Literal& l = left.literals[i];
    if (!l.oriented()) continue;  // s > u1u2
    for (std::size_t j = 0; j < right.size(); ++j) {
      const Literal& r = right.literals[j];
      if (!r.oriented()) continue;  // u2u3 > t
      for (const Overlap& o : overlaps(l.rhs(), r.lhs())) {
        Literal produced = Literal::eq(l.lhs() + o.u3, o.u1 + r.rhs(), prec);
        Conclusion c;
        c.clause = combine(left, i, &right, j, produced, prec);
        c.rule = Rule::Paramodulation;
        c.parents = {left.id, right.id};
        c.detail = overlap_detail(o, prec);
        c.produced = produced;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

namespace {

// Is {x, y} = {s.u, t.u} for some u, pairing x with s?
bool extends(const Str& s, const Str& t, const Str& x, const Str& y) {
  if (x.size() < s.size() || y.size() < t.size()) return false;
  if (x.size() - s.size() != y.size() - t.size()) return false;
  if (!x.starts_with(s) || !y.starts_with(t)) return false;
  return x.substr(s.size()) == y.substr(t.size());
}

}  // namespace

std::vector<Conclusion> factoring(const Clause& c, const Precedence& prec) {
  std::vector<Conclusion> out;
  if (!free_of_selection(c)) return out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Literal& a = c.literals[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k == i) continue;
      const Literal& b = c.literals[k];
      if (a == b && k < i) continue;  // same merge as (k, i)
      bool match = extends(a.lhs(), a.rhs(), b.lhs(), b.rhs()) || extends(a.lhs(), a.rhs(), b.rhs(), b.lhs());
      if (!match) continue;
      Conclusion r;
      r.clause = combine(c, i, nullptr, kNone, std::nullopt, prec);
      r.rule = Rule::Factoring;
      r.parents = {c.id};
      r.detail = "literals " + std::to_string(i) + "," + std::to_string(k);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Conclusion> all_inferences(const Clause& given, const std::vector<const Clause*>& others,
                                       const RuleSet& rules, const Precedence& prec) {
  std::vector<Conclusion> out;
  auto take = [&out](std::vector<Conclusion>&& v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  if (rules.equality_resolution) take(equality_resolution(given, prec));
  if (rules.factoring) take(factoring(given, prec));
  for (const Clause* other : others) {
    bool self = other == &given || other->id == given.id;
    // Several rules can yield the same clause; the first one generated is
    // kept and later copies are dropped as duplicates.
    if (rules.paramodulation) {
      take(paramodulation(given, *other, prec));
      if (!self) take(paramodulation(*other, given, prec));
    }
    if (rules.rewrite) {
      take(rewrite(given, *other, prec));
      if (!self) take(rewrite(*other, given, prec));
    }
    if (rules.superposition) {
      take(superposition(given, *other, prec));
      if (!self) take(superposition(*other, given, prec));
    }
  }
  return out;
}

std::vector<Conclusion> apply_rule(Rule rule, const std::vector<const Clause*>& parents, const Precedence& prec) {
  auto need = [&](std::size_t n) {
    if (parents.size() != n)
      throw ContractViolation(std::string(rule_name(rule)) + " expects " + std::to_string(n) + " premise(s)");
  };
  switch (rule) {
    case Rule::Superposition: need(2); return superposition(*parents[0], *parents[1], prec);
    case Rule::Rewrite: need(2); return rewrite(*parents[0], *parents[1], prec);
    case Rule::Paramodulation: need(2); return paramodulation(*parents[0], *parents[1], prec);
    case Rule::EqualityResolution: need(1); return equality_resolution(*parents[0], prec);
    case Rule::Factoring: need(1); return factoring(*parents[0], prec);
    case Rule::Input:
    case Rule::Simplification: break;
  }
  throw ContractViolation(std::string(rule_name(rule)) + " is not a generating rule");
}

}  // namespace strsup
