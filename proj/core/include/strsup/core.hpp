#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strsup {

/// Index of a letter in the alphabet of a Precedence.
struct Symbol {
  std::uint8_t id = 0;

  friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// Total strict order on a finite alphabet, highest symbol first.
///
/// Symbol ids are assigned in declaration order, so the symbol with id 0 is
/// the maximal one. Comparisons still go through `rank()` so callers never
/// rely on that numbering.
class Precedence {
public:
  static constexpr std::size_t kMaxSymbols = 255;

  /// Throws ConfigError on an empty list, duplicate names or empty names.
  explicit Precedence(std::vector<std::string> names_highest_first);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s.id); }
  std::optional<Symbol> find(std::string_view name) const;

  /// Smaller rank means higher in the precedence.
  std::size_t rank(Symbol s) const { return rank_.at(s.id); }
  bool greater(Symbol a, Symbol b) const { return rank(a) < rank(b); }

  /// Symbols from highest to lowest.
  std::vector<Symbol> symbols() const;

  friend bool operator==(const Precedence&, const Precedence&) = default;

private:
  std::vector<std::string> names_;
  std::vector<std::size_t> rank_;
};

/// build_precedence: convenience over the constructor for single-letter
/// alphabets, e.g. "abc" gives a > b > c.
Precedence build_precedence(std::vector<std::string> names_highest_first);
Precedence build_precedence(std::string_view letters_highest_first);

/// A finite word over the alphabet; the empty word is lambda.
///
/// Stored as bytes, one per symbol id, which gives cheap hashing, small-string
/// storage and contiguous search.
class Str {
public:
  Str() = default;
  Str(std::initializer_list<Symbol> syms);
  explicit Str(std::vector<Symbol> syms);

  static Str from_ids(std::string bytes) {
    Str s;
    s.bytes_ = std::move(bytes);
    return s;
  }

  std::size_t size() const noexcept { return bytes_.size(); }
  bool empty() const noexcept { return bytes_.empty(); }
  Symbol operator[](std::size_t i) const { return Symbol{static_cast<std::uint8_t>(bytes_[i])}; }

  /// Factor [pos, pos + len).
  Str substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return from_ids(bytes_.substr(pos, len));
  }

  bool starts_with(const Str& p) const { return std::string_view(bytes_).starts_with(p.bytes_); }
  bool ends_with(const Str& p) const { return std::string_view(bytes_).ends_with(p.bytes_); }

  /// Copy with the factor [pos, pos + len) replaced by `with`.
  Str replaced(std::size_t pos, std::size_t len, const Str& with) const;

  Str& operator+=(const Str& o) {
    bytes_ += o.bytes_;
    return *this;
  }
  friend Str operator+(Str a, const Str& b) {
    a += b;
    return a;
  }

  /// Raw symbol ids, one byte each.
  const std::string& ids() const noexcept { return bytes_; }

  friend bool operator==(const Str&, const Str&) = default;
  /// Byte order; only used for container keys, not the reduction ordering.
  friend auto operator<=>(const Str& a, const Str& b) { return a.bytes_ <=> b.bytes_; }

private:
  std::string bytes_;
};

/// parse_str: `eps` is lambda, otherwise every character must be a declared
/// single-letter symbol. Throws ParseError.
Str parse_str(std::string_view text, const Precedence& prec);
std::string to_string(const Str& s, const Precedence& prec);

/// An equation or disequation, kept as an unordered pair.
///
/// Built only through `make`, which stores the larger side (length-lex) as
/// lhs, so two literals are equal iff their polarity and sides are.
class Literal {
public:
  static Literal make(bool positive, Str a, Str b, const Precedence& prec);
  static Literal eq(Str a, Str b, const Precedence& prec) { return make(true, std::move(a), std::move(b), prec); }
  static Literal neq(Str a, Str b, const Precedence& prec) { return make(false, std::move(a), std::move(b), prec); }

  bool positive() const noexcept { return positive_; }
  bool negative() const noexcept { return !positive_; }
  const Str& lhs() const noexcept { return lhs_; }
  const Str& rhs() const noexcept { return rhs_; }
  /// lhs strictly above rhs; false only when the sides coincide.
  bool oriented() const noexcept { return lhs_ != rhs_; }
  std::size_t weight() const noexcept { return lhs_.size() + rhs_.size(); }

  friend bool operator==(const Literal&, const Literal&) = default;

private:
  Literal(bool positive, Str lhs, Str rhs) : positive_(positive), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  bool positive_ = true;
  Str lhs_;
  Str rhs_;
};

std::string to_string(const Literal& l, const Precedence& prec);

using ClauseId = std::uint64_t;

enum class Rule {
  Input,
  Superposition,
  Rewrite,
  EqualityResolution,
  Paramodulation,
  Factoring,
  Simplification,
};

std::string_view rule_name(Rule r);

/// How a clause came to be: the rule, its premises (left first) and a
/// human-readable note on the overlap or occurrence used.
struct Origin {
  Rule rule = Rule::Input;
  std::vector<ClauseId> parents;
  std::string detail;
};

/// A finite multiset of literals plus bookkeeping.
///
/// `literals` is kept in canonical order by canonicalize_clause: descending
/// in the literal ordering, so equal multisets have equal vectors.
struct Clause {
  std::vector<Literal> literals;
  ClauseId id = 0;
  std::uint64_t age = 0;
  Origin origin;

  bool empty() const noexcept { return literals.empty(); }
  std::size_t size() const noexcept { return literals.size(); }
  std::size_t weight() const noexcept;
  std::size_t count_positive() const noexcept;
  bool has_negative() const noexcept { return count_positive() != literals.size(); }
  bool is_horn() const noexcept { return count_positive() <= 1; }
  /// Single positive literal with distinct sides.
  bool is_unit_equation() const noexcept {
    return literals.size() == 1 && literals[0].positive() && literals[0].oriented();
  }
};

/// Same literal multiset; ignores id and origin. Both sides must be canonical.
bool same_literals(const Clause& a, const Clause& b);

Clause make_clause(std::vector<Literal> lits, const Precedence& prec);
Clause canonicalize_clause(Clause c, const Precedence& prec);
std::string to_string(const Clause& c, const Precedence& prec);

/// Index into Clause::literals of the selected literal, if any.
struct SelectionOutcome {
  std::optional<std::size_t> selected;

  explicit operator bool() const noexcept { return selected.has_value(); }
};

/// Picks the maximal negative literal, ties to the smallest index.
SelectionOutcome selected_literal(const Clause& c, const Precedence& prec);

struct StrHash {
  std::size_t operator()(const Str& s) const noexcept { return std::hash<std::string>{}(s.ids()); }
};

}  // namespace strsup
