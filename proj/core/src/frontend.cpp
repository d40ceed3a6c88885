#include "strsup/frontend.hpp"

#include <algorithm>
#include <cctype>

#include "strsup/errors.hpp"

namespace strsup {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    auto nl = s.find('\n');
    out.push_back(s.substr(0, nl));
    if (nl == std::string_view::npos) break;
    s.remove_prefix(nl + 1);
  }
  return out;
}

bool is_word(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

Str parse_word(std::string_view w, const Precedence& prec, std::size_t line) {
  if (!is_word(w)) throw ParseError(line, "malformed word '" + std::string(w) + "'");
  try {
    return parse_str(w, prec);
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  }
}

struct RawLiteral {
  bool positive;
  Str lhs;
  Str rhs;
};

RawLiteral parse_literal(std::string_view text, const Precedence& prec, std::size_t line) {
  auto bad = [&] { return ParseError(line, "malformed literal '" + std::string(text) + "'"); };
  auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos) throw bad();
  bool positive = true;
  std::string_view left = text.substr(0, eq);
  if (!left.empty() && left.back() == '!') {
    positive = false;
    left.remove_suffix(1);
  }
  left = trim(left);
  std::string_view right = trim(text.substr(eq + 1));
  if (!is_word(left) || !is_word(right)) throw bad();
  return {positive, parse_word(left, prec, line), parse_word(right, prec, line)};
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::optional<Precedence> prec;
  std::vector<std::pair<std::size_t, std::string_view>> clause_lines;
  std::optional<std::pair<std::size_t, std::string_view>> goal_line;

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, space);
    std::string_view body = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (keyword == "order") {
      if (prec) throw ParseError(line_no, "duplicate order line");
      std::vector<std::string> names;
      for (auto name : split(body, '>')) {
        if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
          throw ParseError(line_no, "symbol names are single letters a-z, got '" + std::string(name) + "'");
        names.emplace_back(name);
      }
      try {
        prec = Precedence(std::move(names));
      } catch (const ConfigError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (keyword == "clause") {
      if (body.empty()) throw ParseError(line_no, "clause without literals");
      clause_lines.emplace_back(line_no, body);
    } else if (keyword == "goal") {
      if (goal_line) throw ParseError(line_no, "duplicate goal");
      goal_line.emplace(line_no, body);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(keyword) + "'");
    }
  }

  if (!prec) throw ParseError(std::max<std::size_t>(line_no, 1), "missing order line");

  Problem p{*prec, {}, std::nullopt};
  for (auto [no, body] : clause_lines) {
    std::vector<Literal> lits;
    for (auto part : split(body, '|')) {
      auto raw = parse_literal(part, p.precedence, no);
      lits.push_back(Literal::make(raw.positive, raw.lhs, raw.rhs, p.precedence));
    }
    p.clauses.push_back(make_clause(std::move(lits), p.precedence));
  }
  if (goal_line) {
    auto raw = parse_literal(goal_line->second, p.precedence, goal_line->first);
    if (!raw.positive) throw ParseError(goal_line->first, "goal must be an equation");
    p.goal = WordProblem{raw.lhs, raw.rhs};
  }
  return p;
}

std::string print_problem(const Problem& p) {
  std::string out = "order ";
  for (std::size_t i = 0; i < p.precedence.size(); ++i) {
    if (i) out += " > ";
    out += p.precedence.name(Symbol{static_cast<std::uint8_t>(i)});
  }
  out += '\n';
  for (const Clause& c : p.clauses) {
    out += "clause ";
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
      if (i) out += " | ";
      out += to_string(c.literals[i], p.precedence);
    }
    out += '\n';
  }
  if (p.goal) out += "goal " + to_string(p.goal->lhs, p.precedence) + " = " + to_string(p.goal->rhs, p.precedence) + '\n';
  return out;
}

std::vector<Clause> refutation_input(const Problem& p) {
  std::vector<Clause> out = p.clauses;
  if (p.goal)
    out.push_back(make_clause({Literal::neq(p.goal->lhs, p.goal->rhs, p.precedence)}, p.precedence));
  return out;
}

}  // namespace strsup
