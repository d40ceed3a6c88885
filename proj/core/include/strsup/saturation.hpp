#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "strsup/core.hpp"
#include "strsup/inference.hpp"

namespace strsup {

struct Limits {
  /// Upper bound on clause ids handed out (inputs included).
  std::size_t max_clauses = 200000;
  /// Upper bound on given-clause iterations.
  std::size_t max_iterations = 200000;
};

struct SaturationOptions {
  RuleSet rules = RuleSet::all();
  /// Tautology deletion, subsumption and simplification. Off means every
  /// conclusion is kept, which is only useful for comparison runs.
  bool contraction = true;
  /// Drop Superposition / positive Rewrite conclusions whose new equation is
  /// joinable below the inference peak by the active unit equations.
  bool join_redundancy = true;
  /// Called for each clause as it enters the derivation log.
  std::function<void(const Clause&)> trace;
};

/// Append-only record of every clause that received an id.
class DerivationLog {
public:
  const Clause& at(ClauseId id) const;
  bool contains(ClauseId id) const noexcept { return id >= 1 && id <= entries_.size(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Clause>& entries() const noexcept { return entries_; }

  /// Ids must be appended densely starting from 1.
  void append(Clause c);

private:
  std::vector<Clause> entries_;
};

/// `<id>: <clause> [<rule> <parent-ids>; <detail>]`, with `[Input]` for
/// input clauses.
std::string format_log_line(const Clause& c, const Precedence& prec);

struct SaturationStats {
  std::size_t iterations = 0;
  std::size_t generated = 0;
  std::size_t deleted_tautologies = 0;
  std::size_t deleted_subsumed = 0;
  std::size_t simplifications = 0;
  std::size_t join_redundant = 0;
};

enum class SaturationStatus { Refuted, Saturated, LimitReached };

struct SaturationResult {
  SaturationStatus status = SaturationStatus::LimitReached;
  /// Id of the empty clause when Refuted.
  std::optional<ClauseId> empty_clause;
  /// Active set when Saturated; active plus passive when LimitReached.
  std::vector<Clause> clauses;
  DerivationLog log;
  SaturationStats stats;

  bool refuted() const noexcept { return status == SaturationStatus::Refuted; }
  bool saturated() const noexcept { return status == SaturationStatus::Saturated; }
};

/// Given-clause saturation. Clause ids in `input` are ignored and reassigned
/// 1..n in input order.
SaturationResult saturate(const std::vector<Clause>& input, const Precedence& prec, const Limits& limits = {},
                          const SaturationOptions& options = {});

/// Steps of a refutation, parents before children, ending in the empty clause.
struct Proof {
  std::vector<Clause> steps;

  /// Steps that are not input clauses.
  std::vector<const Clause*> derived() const;
};

/// Extracts the ancestors of `empty_id` and re-runs every step's rule on its
/// parents. Throws ContractViolation if `empty_id` is not an empty clause in
/// the log and SoundnessError if a step does not reproduce.
Proof replay_proof(const DerivationLog& log, ClauseId empty_id, const Precedence& prec);
Proof replay_proof(const SaturationResult& result, const Precedence& prec);

/// True when `c` is a tautology, subsumed by a clause of `active`, or
/// simplifies (by the oriented units of `active`) into one of those.
bool clause_redundant(const Clause& c, const std::vector<const Clause*>& active, const Precedence& prec);

/// clause_redundant, or joinable below the peak of the inference.
bool conclusion_redundant(const Conclusion& c, const std::vector<const Clause*>& active, const Precedence& prec,
                          bool join_redundancy = true);

/// An inference among active clauses whose conclusion is not redundant.
struct AuditViolation {
  Conclusion conclusion;
};

/// Enumerates every inference among `active` (self-inferences included) and
/// reports those whose conclusions are not redundant w.r.t. `active`.
std::vector<AuditViolation> audit_saturated(const std::vector<Clause>& active, const RuleSet& rules,
                                            const Precedence& prec, bool join_redundancy = true);

}  // namespace strsup
