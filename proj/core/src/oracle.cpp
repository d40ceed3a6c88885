#include "strsup/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "strsup/errors.hpp"

namespace strsup::oracle {

std::string to_string(const GTerm& t, const Precedence& prec) {
  return (t.body.empty() ? std::string() : strsup::to_string(t.body, prec)) + "⊥";
}

std::string to_string(const GClause& c, const Precedence& prec) {
  if (c.literals.empty()) return "□";
  std::string out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    if (i) out += " | ";
    const auto& l = c.literals[i];
    out += to_string(l.lhs, prec) + (l.positive ? " = " : " != ") + to_string(l.rhs, prec);
  }
  return out;
}

std::vector<Str> all_strings(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<Str> out{Str{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < alphabet_size; ++a) {
        out.push_back(out[i] + Str{Symbol{static_cast<std::uint8_t>(a)}});
      }
    }
    begin = end;
  }
  return out;
}

std::vector<GClause> g_instances(const Clause& c, std::size_t max_sub_len, const Precedence& prec) {
  const auto parts = all_strings(prec.size(), max_sub_len);
  std::vector<GClause> out{GClause{}};
  for (const Literal& l : c.literals) {
    std::vector<GClause> next;
    if (l.negative()) {
      for (auto& g : out) {
        g.literals.push_back(GLiteral{false, GTerm{l.lhs()}, GTerm{l.rhs()}, std::nullopt});
        next.push_back(std::move(g));
      }
    } else {
      for (const auto& g : out) {
        for (const Str& w : parts) {
          GClause ext = g;
          ext.literals.push_back(GLiteral{true, GTerm{l.lhs() + w}, GTerm{l.rhs() + w}, w});
          next.push_back(std::move(ext));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

Partition::Partition(std::size_t alphabet_size, std::size_t max_len) : alphabet_(alphabet_size), max_len_(max_len) {
  if (alphabet_size == 0) throw ContractViolation("Partition: empty alphabet");
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    offset_.push_back(total);
    total += layer;
    layer *= alphabet_size;
  }
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t Partition::index(const Str& s) const {
  if (s.size() > max_len_) throw ContractViolation("Partition: word longer than the bound");
  std::size_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) v = v * alphabet_ + s[i].id;
  return offset_[s.size()] + v;
}

Str Partition::word(std::size_t index) const {
  std::size_t len = 0;
  while (len + 1 < offset_.size() && offset_[len + 1] <= index) ++len;
  std::size_t v = index - offset_[len];
  std::string bytes(len, '\0');
  for (std::size_t i = len; i-- > 0;) {
    bytes[i] = static_cast<char>(v % alphabet_);
    v /= alphabet_;
  }
  return Str::from_ids(std::move(bytes));
}

std::size_t Partition::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool Partition::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a < b) std::swap(a, b);
  parent_[a] = b;
  return true;
}

std::size_t Partition::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (find(i) == i) ++n;
  return n;
}

namespace {

// Join u.l.v with u.r.v for every embedding inside the bound.
void add_equation(Partition& p, const Str& l, const Str& r) {
  if (l == r || l.empty()) return;
  const std::size_t n = p.universe_size();
  for (std::size_t i = 0; i < n; ++i) {
    Str x = p.word(i);
    if (x.size() < l.size()) continue;
    const std::string& ids = x.ids();
    for (auto pos = ids.find(l.ids()); pos != std::string::npos; pos = ids.find(l.ids(), pos + 1)) {
      Str y = x.replaced(pos, l.size(), r);
      if (p.in_universe(y)) p.unite(i, p.index(y));
    }
  }
}

}  // namespace

Partition bounded_closure(std::span<const Clause> equations, std::size_t max_len, const Precedence& prec) {
  Partition p(prec.size(), max_len);
  struct Conditional {
    std::vector<const Literal*> antecedents;
    const Literal* head;
    bool fired = false;
  };
  std::vector<Conditional> rules;
  for (const Clause& c : equations) {
    if (!c.is_horn()) throw ContractViolation("bounded_closure: clause is not Horn");
    Conditional rule{{}, nullptr};
    for (const Literal& l : c.literals) {
      if (l.positive()) rule.head = &l;
      else rule.antecedents.push_back(&l);
    }
    if (rule.head) rules.push_back(std::move(rule));
  }

  for (bool progress = true; progress;) {
    progress = false;
    for (auto& rule : rules) {
      if (rule.fired) continue;
      bool holds = std::all_of(rule.antecedents.begin(), rule.antecedents.end(), [&p](const Literal* a) {
        return p.in_universe(a->lhs()) && p.in_universe(a->rhs()) && p.same(a->lhs(), a->rhs());
      });
      if (!holds) continue;
      rule.fired = true;
      progress = true;
      add_equation(p, rule.head->lhs(), rule.head->rhs());
    }
  }
  return p;
}

Entailment entails_bounded(std::span<const Clause> premises, const Literal& goal, std::size_t max_len,
                           const Precedence& prec) {
  if (!goal.positive()) throw ContractViolation("entails_bounded: goal must be an equation");
  if (goal.lhs().size() > max_len || goal.rhs().size() > max_len)
    throw ContractViolation("entails_bounded: bound is smaller than the goal");
  if (goal.lhs() == goal.rhs()) return Entailment::Yes;
  Partition p = bounded_closure(premises, max_len, prec);
  return p.same(goal.lhs(), goal.rhs()) ? Entailment::Yes : Entailment::NoWithinBound;
}

namespace {

struct GroundEq {
  Str a;
  Str b;
};

// Congruence closure over ground terms body.bot, closed under suffixes.
class GroundCongruence {
public:
  std::size_t intern(const Str& s) {
    auto it = ids_.find(s);
    if (it != ids_.end()) return it->second;
    // Suffixes first so that the subterm of every term is interned.
    std::size_t sub = s.empty() ? npos : intern(s.substr(1));
    std::size_t id = terms_.size();
    ids_.emplace(s, id);
    terms_.push_back(s);
    suffix_.push_back(sub);
    parent_.push_back(id);
    return id;
  }

  std::optional<std::size_t> lookup(const Str& s) const {
    auto it = ids_.find(s);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<Str>& terms() const { return terms_; }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  // a(x) = a(y) whenever x = y, to fixpoint.
  void close() {
    for (bool changed = true; changed;) {
      changed = false;
      std::unordered_map<std::size_t, std::size_t> sig;
      for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (suffix_[i] == npos) continue;
        std::size_t key = find(suffix_[i]) * 256 + terms_[i][0].id;
        auto [it, fresh] = sig.emplace(key, i);
        if (!fresh && find(it->second) != find(i)) {
          unite(it->second, i);
          changed = true;
        }
      }
    }
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::unordered_map<Str, std::size_t, StrHash> ids_;
  std::vector<Str> terms_;
  std::vector<std::size_t> suffix_;
  std::vector<std::size_t> parent_;
};

}  // namespace

bool ground_entails(std::span<const Clause> premises, const GClause& target, std::size_t part_bound) {
  GroundCongruence cc;
  std::vector<std::pair<std::size_t, std::size_t>> diseqs;
  std::vector<const Literal*> schemas;  // p.w = q.w for every part w
  std::vector<std::size_t> seen;        // terms already matched against each schema

  auto add_eq = [&cc](const Str& a, const Str& b) { cc.unite(cc.intern(a), cc.intern(b)); };
  for (const auto& l : target.literals) {
    if (l.positive) diseqs.emplace_back(cc.intern(l.lhs.body), cc.intern(l.rhs.body));
    else add_eq(l.lhs.body, l.rhs.body);
  }

  auto distinct = [&](std::size_t x, std::size_t y) {
    x = cc.find(x);
    y = cc.find(y);
    return std::any_of(diseqs.begin(), diseqs.end(), [&](const auto& d) {
      std::size_t a = cc.find(d.first), b = cc.find(d.second);
      return (a == x && b == y) || (a == y && b == x);
    });
  };
  auto contradiction = [&] {
    return std::any_of(diseqs.begin(), diseqs.end(), [&](const auto& d) { return cc.find(d.first) == cc.find(d.second); });
  };

  // Equations p.w = q.w are only instantiated where a side is already a
  // known term; others cannot interact with the goal.
  auto instantiate = [&] {
    seen.resize(schemas.size(), 0);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t k = 0; k < schemas.size(); ++k) {
        const Literal* s = schemas[k];
        for (; seen[k] < cc.terms().size(); ++seen[k]) {
          Str z = cc.terms()[seen[k]];
          for (int side = 0; side < 2; ++side) {
            const Str& p = side == 0 ? s->lhs() : s->rhs();
            const Str& q = side == 0 ? s->rhs() : s->lhs();
            if (!z.starts_with(p) || z.size() - p.size() > part_bound) continue;
            add_eq(z, q + z.substr(p.size()));
            grew = true;
          }
        }
      }
    }
    cc.close();
  };

  // Some instance of the literal is false in every model of what is known.
  auto falsified = [&](const Literal& l) {
    if (l.negative()) return l.lhs() == l.rhs() || cc.find(cc.intern(l.lhs())) == cc.find(cc.intern(l.rhs()));
    if (diseqs.empty()) return false;
    std::vector<std::size_t> sides;
    for (const auto& d : diseqs) {
      sides.push_back(cc.find(d.first));
      sides.push_back(cc.find(d.second));
    }
    for (std::size_t i = 0; i < cc.terms().size(); ++i) {
      const Str& z = cc.terms()[i];
      if (!z.starts_with(l.lhs()) || z.size() - l.lhs().size() > part_bound) continue;
      if (std::find(sides.begin(), sides.end(), cc.find(i)) == sides.end()) continue;
      auto other = cc.lookup(l.rhs() + z.substr(l.lhs().size()));
      if (other && distinct(i, *other)) return true;
    }
    return false;
  };

  std::set<std::pair<std::size_t, std::size_t>> forced;  // (premise, literal)
  for (bool changed = true; changed;) {
    changed = false;
    instantiate();
    if (contradiction()) return true;
    std::size_t known = cc.terms().size();
    for (std::size_t c = 0; c < premises.size(); ++c) {
      const auto& lits = premises[c].literals;
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < lits.size() && open.size() < 2; ++i)
        if (!falsified(lits[i])) open.push_back(i);
      // Every literal of some instance is false: the premise is violated.
      if (open.empty()) return true;
      if (open.size() > 1 || !forced.emplace(c, open[0]).second) continue;
      const Literal& l = lits[open[0]];
      if (l.negative()) diseqs.emplace_back(cc.intern(l.lhs()), cc.intern(l.rhs()));
      else schemas.push_back(&l);
      changed = true;
    }
    if (cc.terms().size() != known) changed = true;
  }
  return false;
}

std::optional<GClause> check_entailed(std::span<const Clause> premises, const Clause& conclusion,
                                      std::size_t instance_bound, std::size_t part_bound, const Precedence& prec) {
  for (auto& g : g_instances(conclusion, instance_bound, prec)) {
    if (!ground_entails(premises, g, part_bound)) return g;
  }
  return std::nullopt;
}

}  // namespace strsup::oracle
