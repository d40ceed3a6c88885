#include "strsup/contraction.hpp"

#include <algorithm>

#include "strsup/errors.hpp"

namespace strsup {

std::optional<Clause> simplify(const Clause& target, const Clause& unit, const Precedence& prec) {
  if (!unit.is_unit_equation()) throw ContractViolation("simplify: demodulator must be a single oriented equation");
  const Str& l = unit.literals[0].lhs();
  const Str& r = unit.literals[0].rhs();
  auto sel = selected_literal(target, prec);

  for (std::size_t i = 0; i < target.size(); ++i) {
    const Literal& lit = target.literals[i];
    if (lit.negative() && sel.selected != i) continue;
    for (int side = 0; side < 2; ++side) {
      if (side == 1 && !lit.oriented()) break;
      const Str& text = side == 0 ? lit.lhs() : lit.rhs();
      if (text.size() <= l.size()) continue;  // l1 must be non-empty
      // Only the first occurrence past the head matters.
      if (std::size_t pos = text.ids().find(l.ids(), 1); pos != std::string::npos) {
        Str rewritten = text.replaced(pos, l.size(), r);
        const Str& other = side == 0 ? lit.rhs() : lit.lhs();
        Clause out = target;
        out.literals[i] = Literal::make(lit.positive(), std::move(rewritten), other, prec);
        out = canonicalize_clause(std::move(out), prec);
        out.origin = Origin{Rule::Simplification,
                            {target.id, unit.id},
                            std::string(side == 0 ? "lhs" : "rhs") + "@" + std::to_string(pos) + " of literal " +
                                std::to_string(i)};
        return out;
      }
    }
  }
  return std::nullopt;
}

bool subsumes(const Clause& c, const Clause& d) {
  if (c.size() > d.size()) return false;
  std::vector<bool> used(d.size(), false);
  for (const Literal& l : c.literals) {
    bool found = false;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!used[j] && d.literals[j] == l) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_tautology(const Clause& c) {
  return std::any_of(c.literals.begin(), c.literals.end(),
                     [](const Literal& l) { return l.positive() && l.lhs() == l.rhs(); });
}

Normalizer::Normalizer(const std::vector<const Clause*>& units) {
  for (const Clause* u : units) {
    lhs_.push_back(u->literals[0].lhs().ids());
    rhs_.push_back(u->literals[0].rhs().ids());
    for (char ch : lhs_.back()) width_ = std::max<std::size_t>(width_, static_cast<std::uint8_t>(ch) + 1);
  }
  if (lhs_.empty()) return;

  // Trie, then Aho-Corasick completion into a full transition table.
  constexpr std::uint32_t none = UINT32_MAX;
  delta_.assign(width_, none);
  match_.assign(1, -1);
  for (std::size_t k = 0; k < lhs_.size(); ++k) {
    std::uint32_t state = 0;
    for (char ch : lhs_[k]) {
      std::uint32_t& next = delta_[state * width_ + static_cast<std::uint8_t>(ch)];
      if (next == none) {
        next = static_cast<std::uint32_t>(match_.size());
        match_.push_back(-1);
        delta_.resize(delta_.size() + width_, none);
      }
      state = delta_[state * width_ + static_cast<std::uint8_t>(ch)];
    }
    if (match_[state] < 0) match_[state] = static_cast<int>(k);
  }
  std::vector<std::uint32_t> fail(match_.size(), 0), queue;
  for (std::size_t a = 0; a < width_; ++a) {
    std::uint32_t& next = delta_[a];
    if (next == none) next = 0;
    else queue.push_back(next);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t state = queue[head];
    // A shorter pattern ending here ends no later; prefer the earlier unit.
    int inherited = match_[fail[state]];
    if (inherited >= 0 && (match_[state] < 0 || inherited < match_[state])) match_[state] = inherited;
    for (std::size_t a = 0; a < width_; ++a) {
      std::uint32_t& next = delta_[state * width_ + a];
      std::uint32_t via_fail = delta_[fail[state] * width_ + a];
      if (next == none) {
        next = via_fail;
      } else {
        fail[next] = via_fail;
        queue.push_back(next);
      }
    }
  }
}

Str Normalizer::operator()(const Str& s) const {
  if (lhs_.empty()) return s;
  // Output so far, with the automaton state after each symbol, and the
  // unread input reversed. A rewrite pops l from the output and pushes r
  // back onto the input, so scanning resumes right where l began.
  std::string out, in(s.ids().rbegin(), s.ids().rend());
  std::vector<std::uint32_t> states{0};
  while (!in.empty()) {
    auto ch = static_cast<std::uint8_t>(in.back());
    in.pop_back();
    std::uint32_t state = ch < width_ ? delta_[states.back() * width_ + ch] : 0;
    out.push_back(static_cast<char>(ch));
    states.push_back(state);
    int k = match_[state];
    if (k < 0) continue;
    out.resize(out.size() - lhs_[k].size());
    states.resize(states.size() - lhs_[k].size());
    in.append(rhs_[k].rbegin(), rhs_[k].rend());
  }
  return Str::from_ids(std::move(out));
}

Str normalize(const Str& s, const std::vector<const Clause*>& units) { return Normalizer(units)(s); }

}  // namespace strsup
