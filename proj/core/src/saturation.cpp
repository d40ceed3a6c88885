#include "strsup/saturation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "strsup/contraction.hpp"
#include "strsup/errors.hpp"
#include "strsup/ordering.hpp"

namespace strsup {

const Clause& DerivationLog::at(ClauseId id) const {
  if (!contains(id)) throw ContractViolation("no clause with id " + std::to_string(id) + " in the log");
  return entries_[id - 1];
}

void DerivationLog::append(Clause c) {
  if (c.id != entries_.size() + 1) throw ContractViolation("derivation log ids must be dense");
  entries_.push_back(std::move(c));
}

std::string format_log_line(const Clause& c, const Precedence& prec) {
  std::string out = std::to_string(c.id) + ": " + to_string(c, prec) + " [" + std::string(rule_name(c.origin.rule));
  if (c.origin.rule != Rule::Input) {
    out += ' ';
    for (std::size_t i = 0; i < c.origin.parents.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c.origin.parents[i]);
    }
    out += "; " + c.origin.detail;
  }
  return out + "]";
}

std::vector<const Clause*> Proof::derived() const {
  std::vector<const Clause*> out;
  for (const auto& c : steps)
    if (c.origin.rule != Rule::Input) out.push_back(&c);
  return out;
}

namespace {

std::vector<const Clause*> unit_equations(const std::vector<const Clause*>& clauses) {
  std::vector<const Clause*> units;
  for (const Clause* c : clauses)
    if (c->is_unit_equation()) units.push_back(c);
  std::sort(units.begin(), units.end(), [](const Clause* a, const Clause* b) { return a->id < b->id; });
  return units;
}

bool subsumed_by_any(const Clause& c, const std::vector<const Clause*>& clauses) {
  return std::any_of(clauses.begin(), clauses.end(), [&c](const Clause* d) { return subsumes(*d, c); });
}

// Simplify to fixpoint, smallest unit id first. Returns every intermediate.
std::vector<Clause> simplification_chain(const Clause& c, const std::vector<const Clause*>& units,
                                         const Precedence& prec) {
  std::vector<Clause> chain;
  const Clause* cur = &c;
  for (;;) {
    std::optional<Clause> next;
    for (const Clause* u : units) {
      if (u->id == cur->id) continue;
      next = simplify(*cur, *u, prec);
      if (next) break;
    }
    if (!next) return chain;
    chain.push_back(std::move(*next));
    cur = &chain.back();
    if (is_tautology(*cur)) return chain;
  }
}

bool join_redundant(const Conclusion& c, const Normalizer& nf, const Precedence& prec) {
  if (!c.produced || !c.peak || !c.produced->positive()) return false;
  const Str& a = c.produced->lhs();
  const Str& b = c.produced->rhs();
  if (cmp_str(a, *c.peak, prec) != Cmp::Less || cmp_str(b, *c.peak, prec) != Cmp::Less) return false;
  return nf(a) == nf(b);
}

std::string multiset_key(const Clause& c) {
  std::string key;
  for (const auto& l : c.literals) {
    key += l.positive() ? '+' : '-';
    key += std::to_string(l.lhs().size()) + ':' + l.lhs().ids();
    key += std::to_string(l.rhs().size()) + ':' + l.rhs().ids();
  }
  return key;
}

class Prover {
public:
  Prover(const Precedence& prec, const Limits& limits, const SaturationOptions& options)
      : prec_(prec), limits_(limits), options_(options) {}

  SaturationResult run(const std::vector<Clause>& input) {
    for (const Clause& c : input) {
      Clause copy = canonicalize_clause(c, prec_);
      copy.origin = Origin{};
      ClauseId id = record(std::move(copy));
      const Clause& logged = log_.at(id);
      if (logged.empty()) return refuted(id);
      if (options_.contraction && is_tautology(logged)) {
        ++stats_.deleted_tautologies;
        continue;
      }
      if (options_.contraction && passive_keys_.count(multiset_key(logged))) {
        ++stats_.deleted_subsumed;
        continue;
      }
      enqueue(logged);
    }

    while (!by_age_.empty()) {
      if (stats_.iterations >= limits_.max_iterations || log_.size() >= limits_.max_clauses) return limit_reached();
      ++stats_.iterations;
      Clause given = pop_given();

      if (options_.contraction) {
        if (is_tautology(given)) {
          ++stats_.deleted_tautologies;
          continue;
        }
        auto chain = simplification_chain(given, active_units(), prec_);
        if (!chain.empty()) {
          ClauseId last = given.id;
          for (Clause& step : chain) {
            step.origin.parents[0] = last;
            last = record(std::move(step));
            ++stats_.simplifications;
          }
          given = log_.at(last);
          if (given.empty()) return refuted(given.id);
          if (is_tautology(given)) {
            ++stats_.deleted_tautologies;
            continue;
          }
        }
        if (subsumed_by_any(given, active_ptrs())) {
          ++stats_.deleted_subsumed;
          continue;
        }
      }
      if (given.empty()) return refuted(given.id);

      if (options_.contraction) {
        if (auto r = backward_contract(given)) return *r;
      }
      activate(given);

      auto others = active_ptrs();
      const Clause& g = active_.at(given.id);
      auto conclusions = all_inferences(g, others, options_.rules, prec_);
      for (auto& c : conclusions) {
        if (auto r = admit(std::move(c))) return *r;
        if (log_.size() >= limits_.max_clauses) return limit_reached();
      }
    }

    SaturationResult r = finish(SaturationStatus::Saturated);
    return r;
  }

private:
  ClauseId record(Clause c) {
    c.id = log_.size() + 1;
    c.age = c.id;
    if (options_.trace) options_.trace(c);
    log_.append(std::move(c));
    return log_.size();
  }

  void enqueue(const Clause& c) {
    passive_.emplace(c.id, c);
    by_weight_.emplace(c.weight(), c.id);
    by_age_.insert(c.id);
    passive_keys_[multiset_key(c)] = c.id;
  }

  Clause pop_given() {
    ClauseId id;
    // Four picks by (weight, id), then one by id; ids grow without bound, so
    // every queued clause is eventually picked.
    if (pick_counter_++ % 5 < 4) {
      id = by_weight_.begin()->second;
    } else {
      id = *by_age_.begin();
    }
    auto it = passive_.find(id);
    Clause c = std::move(it->second);
    passive_.erase(it);
    by_weight_.erase({c.weight(), id});
    by_age_.erase(id);
    auto key = passive_keys_.find(multiset_key(c));
    if (key != passive_keys_.end() && key->second == id) passive_keys_.erase(key);
    return c;
  }

  // Cached views of the active set; rebuilt after it changes.
  const std::vector<const Clause*>& active_ptrs() {
    if (views_stale_) refresh_views();
    return ptrs_view_;
  }

  const std::vector<const Clause*>& active_units() {
    if (views_stale_) refresh_views();
    return units_view_;
  }

  const Normalizer& normalizer() {
    if (views_stale_) refresh_views();
    return normalizer_;
  }

  void refresh_views() {
    ptrs_view_.clear();
    for (ClauseId id : active_order_) ptrs_view_.push_back(&active_.at(id));
    units_view_ = unit_equations(ptrs_view_);
    normalizer_ = Normalizer(units_view_);
    views_stale_ = false;
  }

  void activate(const Clause& c) {
    active_.emplace(c.id, c);
    active_order_.push_back(c.id);
    views_stale_ = true;
  }

  void deactivate(ClauseId id) {
    active_.erase(id);
    active_order_.erase(std::find(active_order_.begin(), active_order_.end(), id));
    views_stale_ = true;
  }

  // Simplify and subsume active clauses by the new given clause.
  std::optional<SaturationResult> backward_contract(const Clause& given) {
    std::vector<ClauseId> ids = active_order_;
    for (ClauseId id : ids) {
      const Clause& a = active_.at(id);
      if (given.is_unit_equation()) {
        if (auto s = simplify(a, given, prec_)) {
          ++stats_.simplifications;
          deactivate(id);
          if (auto r = admit_clause(std::move(*s))) return r;
          continue;
        }
      }
      if (subsumes(given, a)) {
        ++stats_.deleted_subsumed;
        deactivate(id);
      }
    }
    return std::nullopt;
  }

  // Forward contraction of a new clause. Returns the clauses to log (raw
  // first, then each simplification step) or nothing if it is deleted.
  std::optional<std::vector<Clause>> contract(Clause c) {
    std::vector<Clause> out;
    if (!options_.contraction) {
      out.push_back(std::move(c));
      return out;
    }
    if (is_tautology(c)) {
      ++stats_.deleted_tautologies;
      return std::nullopt;
    }
    auto chain = simplification_chain(c, active_units(), prec_);
    const Clause& last = chain.empty() ? c : chain.back();
    if (is_tautology(last)) {
      ++stats_.deleted_tautologies;
      return std::nullopt;
    }
    if (subsumed_by_any(last, active_ptrs()) || passive_keys_.count(multiset_key(last))) {
      ++stats_.deleted_subsumed;
      return std::nullopt;
    }
    stats_.simplifications += chain.size();
    out.push_back(std::move(c));
    for (auto& s : chain) out.push_back(std::move(s));
    return out;
  }

  std::optional<SaturationResult> admit(Conclusion c) {
    ++stats_.generated;
    if (options_.join_redundancy && join_redundant(c, normalizer(), prec_)) {
      ++stats_.join_redundant;
      return std::nullopt;
    }
    c.clause.origin = Origin{c.rule, c.parents, c.detail};
    return admit_clause(std::move(c.clause));
  }

  // `c` already carries its origin.
  std::optional<SaturationResult> admit_clause(Clause c) {
    auto kept = contract(std::move(c));
    if (!kept) return std::nullopt;
    ClauseId last = 0;
    for (std::size_t i = 0; i < kept->size(); ++i) {
      Clause& step = (*kept)[i];
      if (i > 0) step.origin.parents[0] = last;
      last = record(std::move(step));
    }
    const Clause& logged = log_.at(last);
    if (logged.empty()) return refuted(last);
    enqueue(logged);
    return std::nullopt;
  }

  SaturationResult refuted(ClauseId id) {
    SaturationResult r = finish(SaturationStatus::Refuted);
    r.empty_clause = id;
    return r;
  }

  SaturationResult limit_reached() { return finish(SaturationStatus::LimitReached); }

  SaturationResult finish(SaturationStatus status) {
    SaturationResult r;
    r.status = status;
    for (ClauseId id : active_order_) r.clauses.push_back(active_.at(id));
    if (status == SaturationStatus::LimitReached)
      for (ClauseId id : by_age_) r.clauses.push_back(passive_.at(id));
    std::sort(r.clauses.begin(), r.clauses.end(), [](const Clause& a, const Clause& b) { return a.id < b.id; });
    r.log = std::move(log_);
    r.stats = stats_;
    return r;
  }

  const Precedence& prec_;
  Limits limits_;
  const SaturationOptions& options_;
  DerivationLog log_;
  SaturationStats stats_;

  std::unordered_map<ClauseId, Clause> active_;
  std::vector<ClauseId> active_order_;
  std::vector<const Clause*> ptrs_view_;
  std::vector<const Clause*> units_view_;
  Normalizer normalizer_;
  bool views_stale_ = true;
  std::unordered_map<ClauseId, Clause> passive_;
  std::set<std::pair<std::size_t, ClauseId>> by_weight_;
  std::set<ClauseId> by_age_;
  std::unordered_map<std::string, ClauseId> passive_keys_;
  std::size_t pick_counter_ = 0;
};

}  // namespace

SaturationResult saturate(const std::vector<Clause>& input, const Precedence& prec, const Limits& limits,
                          const SaturationOptions& options) {
  return Prover(prec, limits, options).run(input);
}

Proof replay_proof(const DerivationLog& log, ClauseId empty_id, const Precedence& prec) {
  if (!log.contains(empty_id) || !log.at(empty_id).empty())
    throw ContractViolation("replay_proof: clause " + std::to_string(empty_id) + " is not an empty clause");

  std::set<ClauseId> needed;
  std::vector<ClauseId> stack{empty_id};
  while (!stack.empty()) {
    ClauseId id = stack.back();
    stack.pop_back();
    if (!needed.insert(id).second) continue;
    for (ClauseId p : log.at(id).origin.parents) {
      if (p >= id) throw SoundnessError("clause " + std::to_string(id) + " cites a later parent");
      stack.push_back(p);
    }
  }

  Proof proof;
  for (ClauseId id : needed) {
    const Clause& c = log.at(id);
    std::vector<const Clause*> parents;
    for (ClauseId p : c.origin.parents) parents.push_back(&log.at(p));
    bool ok = false;
    switch (c.origin.rule) {
      case Rule::Input: ok = parents.empty(); break;
      case Rule::Simplification: {
        if (parents.size() != 2) break;
        auto s = simplify(*parents[0], *parents[1], prec);
        ok = s && same_literals(*s, c);
        break;
      }
      default: {
        for (const auto& concl : apply_rule(c.origin.rule, parents, prec)) {
          if (same_literals(concl.clause, c)) {
            ok = true;
            break;
          }
        }
      }
    }
    if (!ok) throw SoundnessError("step does not replay: " + format_log_line(c, prec));
    proof.steps.push_back(c);
  }
  return proof;
}

Proof replay_proof(const SaturationResult& result, const Precedence& prec) {
  if (!result.refuted() || !result.empty_clause)
    throw ContractViolation("replay_proof: result is not a refutation");
  return replay_proof(result.log, *result.empty_clause, prec);
}

bool clause_redundant(const Clause& c, const std::vector<const Clause*>& active, const Precedence& prec) {
  if (is_tautology(c) || subsumed_by_any(c, active)) return true;
  auto chain = simplification_chain(c, unit_equations(active), prec);
  if (chain.empty()) return false;
  return is_tautology(chain.back()) || subsumed_by_any(chain.back(), active);
}

bool conclusion_redundant(const Conclusion& c, const std::vector<const Clause*>& active, const Precedence& prec,
                          bool join_redundancy) {
  if (clause_redundant(c.clause, active, prec)) return true;
  return join_redundancy && join_redundant(c, Normalizer(unit_equations(active)), prec);
}

std::vector<AuditViolation> audit_saturated(const std::vector<Clause>& active, const RuleSet& rules,
                                            const Precedence& prec, bool join_redundancy) {
  std::vector<const Clause*> ptrs;
  for (const auto& c : active) ptrs.push_back(&c);
  std::vector<AuditViolation> out;
  for (std::size_t i = 0; i < active.size(); ++i) {
    std::vector<const Clause*> partners(ptrs.begin(), ptrs.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (auto& c : all_inferences(active[i], partners, rules, prec)) {
      if (!conclusion_redundant(c, ptrs, prec, join_redundancy)) out.push_back(AuditViolation{std::move(c)});
    }
  }
  return out;
}

}  // namespace strsup
