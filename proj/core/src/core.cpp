#include "strsup/core.hpp"

#include <algorithm>
#include <unordered_set>

#include "strsup/errors.hpp"
#include "strsup/ordering.hpp"

namespace strsup {

Precedence::Precedence(std::vector<std::string> names_highest_first) : names_(std::move(names_highest_first)) {
  if (names_.empty()) throw ConfigError("precedence needs at least one symbol");
  if (names_.size() > kMaxSymbols) throw ConfigError("precedence has more than 255 symbols");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw ConfigError("empty symbol name");
    if (!seen.insert(n).second) throw ConfigError("duplicate symbol '" + n + "' in precedence");
  }
  rank_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) rank_[i] = i;
}

std::optional<Symbol> Precedence::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Symbol{static_cast<std::uint8_t>(i)};
  return std::nullopt;
}

std::vector<Symbol> Precedence::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Symbol{static_cast<std::uint8_t>(i)});
  std::sort(out.begin(), out.end(), [this](Symbol a, Symbol b) { return greater(a, b); });
  return out;
}

Precedence build_precedence(std::vector<std::string> names_highest_first) {
  return Precedence(std::move(names_highest_first));
}

Precedence build_precedence(std::string_view letters_highest_first) {
  std::vector<std::string> names;
  for (char c : letters_highest_first) names.emplace_back(1, c);
  return Precedence(std::move(names));
}

Str::Str(std::initializer_list<Symbol> syms) {
  for (Symbol s : syms) bytes_.push_back(static_cast<char>(s.id));
}

Str::Str(std::vector<Symbol> syms) {
  for (Symbol s : syms) bytes_.push_back(static_cast<char>(s.id));
}

Str Str::replaced(std::size_t pos, std::size_t len, const Str& with) const {
  std::string out;
  out.reserve(bytes_.size() - len + with.size());
  out.append(bytes_, 0, pos);
  out.append(with.bytes_);
  out.append(bytes_, pos + len);
  return from_ids(std::move(out));
}

Str parse_str(std::string_view text, const Precedence& prec) {
  if (text == "eps") return {};
  std::string bytes;
  for (char c : text) {
    auto sym = prec.find(std::string_view(&c, 1));
    if (!sym) throw ParseError(0, "undeclared symbol '" + std::string(1, c) + "'");
    bytes.push_back(static_cast<char>(sym->id));
  }
  return Str::from_ids(std::move(bytes));
}

std::string to_string(const Str& s, const Precedence& prec) {
  if (s.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += prec.name(s[i]);
  return out;
}

Literal Literal::make(bool positive, Str a, Str b, const Precedence& prec) {
  if (cmp_str(a, b, prec) == Cmp::Less) std::swap(a, b);
  return Literal(positive, std::move(a), std::move(b));
}

std::string to_string(const Literal& l, const Precedence& prec) {
  return to_string(l.lhs(), prec) + (l.positive() ? " = " : " != ") + to_string(l.rhs(), prec);
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Input: return "Input";
    case Rule::Superposition: return "Superposition";
    case Rule::Rewrite: return "Rewrite";
    case Rule::EqualityResolution: return "EqualityResolution";
    case Rule::Paramodulation: return "Paramodulation";
    case Rule::Factoring: return "Factoring";
    case Rule::Simplification: return "Simplification";
  }
  return "?";
}

std::size_t Clause::weight() const noexcept {
  std::size_t w = 0;
  for (const auto& l : literals) w += l.weight();
  return w;
}

std::size_t Clause::count_positive() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(literals.begin(), literals.end(), [](const Literal& l) { return l.positive(); }));
}

bool same_literals(const Clause& a, const Clause& b) { return a.literals == b.literals; }

Clause canonicalize_clause(Clause c, const Precedence& prec) {
  for (auto& l : c.literals) l = Literal::make(l.positive(), l.lhs(), l.rhs(), prec);
  std::stable_sort(c.literals.begin(), c.literals.end(), [&prec](const Literal& a, const Literal& b) {
    return cmp_literal(a, b, prec) == Cmp::Greater;
  });
  return c;
}

Clause make_clause(std::vector<Literal> lits, const Precedence& prec) {
  Clause c;
  c.literals = std::move(lits);
  return canonicalize_clause(std::move(c), prec);
}

std::string to_string(const Clause& c, const Precedence& prec) {
  if (c.empty()) return "□";
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.literals[i], prec);
  }
  return out;
}

SelectionOutcome selected_literal(const Clause& c, const Precedence& prec) {
  SelectionOutcome out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (!c.literals[i].negative()) continue;
    if (!out.selected || cmp_literal(c.literals[i], c.literals[*out.selected], prec) == Cmp::Greater)
      out.selected = i;
  }
  return out;
}

}  // namespace strsup
