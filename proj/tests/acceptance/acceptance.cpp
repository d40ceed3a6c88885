// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strsup/contraction.hpp"
#include "strsup/inference.hpp"
#include "strsup/oracle.hpp"
#include "strsup/ordering.hpp"
#include "strsup/saturation.hpp"
#include "strsup/strmatch.hpp"
#include "strsup/wordproblem.hpp"
#include "test_support.hpp"

using namespace strsup;
using namespace strsup::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    else if (note.size() < 400) note += "; " + why;
    pass = false;
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

// 1 ----------------------------------------------------------------------

Outcome example1() {
  Outcome v;
  auto p = build_precedence("abcde");
  auto t0 = Clock::now();
  auto r = saturate(clauses({"ad = b | ad = c", "b = c", "ad = e", "c != e"}, p), p);
  if (!r.refuted()) {
    v.fail("not refuted");
    return v;
  }
  auto proof = replay_proof(r, p);
  double secs = seconds_since(t0);
  auto steps = proof.derived();
  std::vector<Rule> want_rules{Rule::Paramodulation, Rule::Factoring, Rule::Rewrite, Rule::Rewrite,
                               Rule::EqualityResolution};
  std::vector<std::string> want{"ad = c | ad = c", "ad = c", "c = e", "e != e"};
  std::vector<std::string> got;
  for (const Clause* c : steps) got.push_back(format_log_line(*c, p));
  if (steps.size() != want_rules.size()) {
    v.fail("proof has " + std::to_string(steps.size()) + " steps: " + join(got));
    return v;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i]->origin.rule != want_rules[i]) v.fail("step " + got[i] + " uses the wrong rule");
    if (i < want.size() && !same_literals(*steps[i], C(want[i], p))) v.fail("step " + got[i] + " differs");
  }
  if (!steps.back()->empty()) v.fail("last step is not the empty clause");
  if (secs >= 1.0) v.fail("took " + std::to_string(secs) + " s");
  v.note = v.pass ? "proof " + join(got) + "; " + std::to_string(secs * 1e3) + " ms" : v.note;
  return v;
}

// 2 ----------------------------------------------------------------------

Outcome example2() {
  Outcome v;
  auto p = build_precedence("abcd");
  auto t0 = Clock::now();
  auto r = saturate(clauses({"aa = a | bd != a", "cd = b", "ad = c", "bd = a", "dab != db"}, p), p);
  double secs = seconds_since(t0);
  if (!r.refuted()) v.fail("not refuted");
  for (auto text : {"aa = a | a != a", "aa = a", "ac = ad", "add = ab", "ab = cd", "dcd != db", "db != db"})
    if (!log_has(r.log, C(text, p))) v.fail(std::string("log lacks ") + text);
  if (r.refuted()) replay_proof(r, p);
  if (secs >= 1.0) v.fail("took " + std::to_string(secs) + " s");
  if (v.pass)
    v.note = "refuted at clause " + std::to_string(*r.empty_clause) + ", published clauses 6-12 all logged; " +
             std::to_string(secs * 1e3) + " ms";
  return v;
}

// 3 ----------------------------------------------------------------------

Outcome example3() {
  Outcome v;
  auto p = build_precedence("abc");
  auto theory = clauses({"aa = eps", "bb = eps", "ab = eps", "ab != ba | ac = ca", "ab != ba | ac != ca | bc = cb"}, p);
  auto t0 = Clock::now();
  auto sat = saturate_horn(theory, p);
  if (!sat.saturated()) {
    v.fail("saturation did not finish");
    return v;
  }
  std::vector<std::string> units;
  std::vector<Clause> unit_clauses;
  for (const auto& c : sat.clauses) {
    if (!c.is_unit_equation()) continue;
    units.push_back(to_string(c, p));
    unit_clauses.push_back(c);
  }
  auto expected = clauses({"bb = eps", "a = b", "bc = cb"}, p);
  bool exact = unit_clauses.size() == expected.size();
  for (const auto& e : expected)
    exact = exact && std::any_of(unit_clauses.begin(), unit_clauses.end(),
                                 [&e](const Clause& c) { return same_literals(c, e); });
  if (!exact) v.fail("surviving unit equations are {" + join(units) + "}, expected {bb = eps, a = b, bc = cb}");

  auto d = decide_word(sat.clauses, {S("acbcba", p), S("bccaba", p)}, p);
  double secs = seconds_since(t0);
  if (d.verdict != strsup::Verdict::Entailed) v.fail("word problem not entailed");

  // The published chain G, 4', 5', 6' must be a path of Rewrite steps.
  auto units_p = horn_units(sat.clauses);
  std::vector<Goal> waypoints{Goal::make(S("acbcba", p), S("bccaba", p), p),
                              Goal::make(S("bcbcbb", p), S("bccbbb", p), p), Goal::make(S("bcbc", p), S("bccb", p), p),
                              Goal::make(S("ccbb", p), S("ccbb", p), p)};
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    if (!GoalClosure(waypoints[i - 1], units_p, p).contains(waypoints[i]))
      v.fail("goal " + to_string(waypoints[i].literal(p), p) + " is not reachable from the previous one");
  }
  if (secs >= 1.0) v.fail("took " + std::to_string(secs) + " s");
  if (v.pass) v.note = "units {" + join(units) + "}; chain through 4'-6'; " + std::to_string(secs * 1e3) + " ms";
  else v.note += " (entailment and chain: " + std::string(d.verdict == strsup::Verdict::Entailed ? "ok" : "bad") + ")";
  return v;
}

// 4 ----------------------------------------------------------------------

Outcome ordering_laws() {
  Outcome v;
  Gen g(4004);
  std::size_t violations = 0;
  std::size_t transitivity_checked = 0;
  for (int i = 0; i < 10000; ++i) {
    std::size_t k = g.between(1, 5);
    std::string names = std::string("abcde").substr(0, k);
    std::shuffle(names.begin(), names.end(), g.engine());
    auto p = build_precedence(names);
    Str s = g.str(k, 0, 12), t = g.str(k, 0, 12);
    if (g.coin(0.1)) t = s;
    Cmp st = cmp_str(s, t, p), ts = cmp_str(t, s, p);
    // totality and antisymmetry
    if (ts != flip(st)) ++violations;
    if ((st == Cmp::Equal) != (s == t)) ++violations;
    // irreflexivity
    if (cmp_str(s, s, p) != Cmp::Equal) ++violations;
    // length compatibility
    if (s.size() > t.size() && st != Cmp::Greater) ++violations;
    // admissibility under a random context x _ y
    if (st == Cmp::Greater) {
      Str x = g.str(k, 0, 4), y = g.str(k, 0, 4);
      if (cmp_str(x + s + y, x + t + y, p) != Cmp::Greater) ++violations;
    }
    // transitivity on a sampled third string
    Str u = g.str(k, 0, 12);
    Cmp tu = cmp_str(t, u, p);
    if (st == Cmp::Greater && tu == Cmp::Greater) {
      ++transitivity_checked;
      if (cmp_str(s, u, p) != Cmp::Greater) ++violations;
    }
  }
  if (violations) v.fail(std::to_string(violations) + " violations");
  v.note = v.pass ? "10000 pairs, " + std::to_string(transitivity_checked) + " transitive triples, 0 violations" : v.note;
  return v;
}

// 5 ----------------------------------------------------------------------

Outcome matching() {
  Outcome v;
  Gen g(5005);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    std::size_t k = g.between(1, 3);
    Str pat = g.str(k, 1, 4), text = g.str(k, 0, 14);
    std::vector<std::size_t> naive;
    for (std::size_t j = 0; j + pat.size() <= text.size(); ++j)
      if (text.substr(j, pat.size()) == pat) naive.push_back(j);
    if (occurrence_starts(pat, text) != naive) ++mismatches;

    Str left = g.str(k, 0, 10), right = g.str(k, 0, 10);
    std::vector<Overlap> brute;
    for (std::size_t n = 1; n <= std::min(left.size(), right.size()); ++n)
      if (left.substr(left.size() - n) == right.substr(0, n))
        brute.push_back({left.substr(0, left.size() - n), right.substr(0, n), right.substr(n)});
    if (overlaps(left, right) != brute) ++mismatches;
  }
  if (mismatches) v.fail(std::to_string(mismatches) + " mismatches");
  v.note = v.pass ? "10000 occurrence and 10000 overlap cases, 0 mismatches" : v.note;
  return v;
}

// 6 ----------------------------------------------------------------------

Outcome soundness() {
  Outcome v;
  auto p = build_precedence("ab");
  Gen g(6006);
  std::map<Rule, std::size_t> per_rule;
  std::size_t applications = 0, failures = 0;
  const Rule binary[] = {Rule::Superposition, Rule::Rewrite, Rule::Paramodulation};
  const Rule unary[] = {Rule::EqualityResolution, Rule::Factoring};
  while (applications < 1000) {
    // Cycle through the rules so each gets its share.
    Rule rule = applications % 5 < 3 ? binary[applications % 5] : unary[applications % 5 - 3];
    std::vector<Clause> premises;
    std::vector<Conclusion> out;
    for (int attempt = 0; attempt < 2000 && out.empty(); ++attempt) {
      premises.clear();
      double neg = rule == Rule::Rewrite || rule == Rule::EqualityResolution ? 0.4 : 0.0;
      std::size_t arity = rule == Rule::EqualityResolution || rule == Rule::Factoring ? 1 : 2;
      for (std::size_t i = 0; i < arity; ++i) {
        Clause c = g.clause(p, 2, 3, neg);
        if (rule == Rule::EqualityResolution && g.coin()) {
          Str s = g.str(2, 0, 2);
          c.literals.push_back(Literal::neq(s, s, p));
          c = canonicalize_clause(c, p);
        }
        if (rule == Rule::Factoring && g.coin()) {
          const Literal& l = c.literals[0];
          Str u = g.str(2, 0, 2);
          c.literals.push_back(Literal::eq(l.lhs() + u, l.rhs() + u, p));
          c = canonicalize_clause(c, p);
        }
        c.id = i + 1;
        premises.push_back(c);
      }
      std::vector<const Clause*> ps;
      for (const auto& c : premises) ps.push_back(&c);
      out = apply_rule(rule, ps, p);
    }
    if (out.empty()) {
      v.fail(std::string("could not generate an application of ") + std::string(rule_name(rule)));
      return v;
    }
    const Conclusion& c = out[g.below(out.size())];
    ++applications;
    ++per_rule[rule];
    // Ground parts longer than the instance bound plus the longest premise
    // side are never needed to justify a single step.
    std::size_t longest = 0;
    for (const auto& pc : premises)
      for (const auto& l : pc.literals) longest = std::max({longest, l.lhs().size(), l.rhs().size()});
    if (auto bad = oracle::check_entailed(premises, c.clause, 3, 3 + longest, p)) {
      ++failures;
      std::string ps;
      for (const auto& x : premises) ps += "(" + to_string(x, p) + ")";
      v.fail(std::string(rule_name(rule)) + " " + ps + " => " + to_string(c.clause, p) + " at " +
             oracle::to_string(*bad, p));
    }
  }
  if (v.pass) {
    std::string mix;
    for (auto [r, n] : per_rule) mix += (mix.empty() ? "" : ", ") + std::string(rule_name(r)) + " " + std::to_string(n);
    v.note = std::to_string(applications) + " applications (" + mix + "), 0 failures at bound 3";
  } else {
    v.note = std::to_string(failures) + " failures: " + v.note;
  }
  return v;
}

// 7-9 share their random theories --------------------------------------------

struct Theory {
  std::vector<Clause> input;
  SaturationResult saturated;
};

std::vector<Theory> theories;
std::size_t theory_attempts = 0;

void build_theories() {
  auto p = build_precedence("abc");
  Gen g(7007);
  while (theories.size() < 100 && theory_attempts < 5000) {
    ++theory_attempts;
    std::vector<Clause> input;
    std::size_t n = g.between(1, 4);
    for (std::size_t i = 0; i < n; ++i) input.push_back(g.equation(p, 4));
    auto r = saturate_horn(input, p, Limits{1000, 1000});
    if (r.saturated()) theories.push_back({std::move(input), std::move(r)});
  }
}

Outcome audit() {
  Outcome v;
  auto p = build_precedence("abc");
  if (theories.size() < 100) v.fail("only " + std::to_string(theories.size()) + " theories saturated");
  std::size_t bad = 0;
  for (const auto& t : theories) {
    auto violations = audit_saturated(t.saturated.clauses, RuleSet::all(), p);
    if (!violations.empty()) {
      ++bad;
      v.fail("non-redundant " + std::string(rule_name(violations[0].conclusion.rule)) + " conclusion " +
             to_string(violations[0].conclusion.clause, p));
    }
  }
  if (v.pass)
    v.note = "100 saturated sets (" + std::to_string(theory_attempts) + " drawn), no non-redundant inference";
  else
    v.note = std::to_string(bad) + " sets with violations: " + v.note;
  return v;
}

struct Instance {
  const Theory* theory;
  Str s;
  Str t;
  strsup::Verdict decided;
};

std::vector<Instance> instances;

Outcome word_problems() {
  Outcome v;
  auto p = build_precedence("abc");
  Gen g(8008);
  std::size_t oracle_yes = 0, entailed = 0, missed = 0, unconfirmed = 0;
  std::set<const Theory*> unconfirmed_theories;
  std::string examples;
  auto example = [&examples](const std::string& e) {
    if (std::count(examples.begin(), examples.end(), ';') < 3) examples += e + "; ";
  };
  for (const auto& t : theories) {
    std::map<std::size_t, oracle::Partition> closures;
    auto closure = [&](std::size_t bound) -> const oracle::Partition& {
      auto it = closures.find(bound);
      if (it == closures.end()) it = closures.emplace(bound, oracle::bounded_closure(t.input, bound, p)).first;
      return it->second;
    };
    for (int i = 0; i < 20; ++i) {
      Str s = g.str(3, 0, 3);
      Str w = g.str(3, 0, 3);
      // Half of the goals follow a random rewrite walk, so that yes-instances occur.
      if (i % 2 == 0) {
        w = s;
        for (int step = 0; step < 3; ++step) {
          const Clause& e = t.input[g.below(t.input.size())];
          const Literal& l = e.literals[0];
          bool forward = g.coin();
          const Str& from = forward ? l.lhs() : l.rhs();
          const Str& to = forward ? l.rhs() : l.lhs();
          if (from.empty()) {
            std::size_t pos = g.between(0, w.size());
            w = w.replaced(pos, 0, to);
            continue;
          }
          auto occ = occurrence_starts(from, w);
          if (!occ.empty()) w = w.replaced(occ[g.below(occ.size())], from.size(), to);
        }
        if (w.size() > 4) w = g.str(3, 0, 3);
      }
      auto d = decide_word(t.saturated.clauses, {s, w}, p);
      std::size_t bound = s.size() + w.size() + 4;
      bool yes = closure(bound).same(s, w);
      if (yes) ++oracle_yes;
      if (d.verdict == strsup::Verdict::Entailed) ++entailed;
      if (yes && d.verdict != strsup::Verdict::Entailed) {
        ++missed;
        example("oracle yes, decide no: " + to_string(s, p) + " = " + to_string(w, p));
      }
      if (d.verdict == strsup::Verdict::Entailed && !yes) {
        ++unconfirmed;
        unconfirmed_theories.insert(&t);
        example("decide yes, oracle unconfirmed at bound " + std::to_string(bound) + ": " + to_string(s, p) + " = " +
                to_string(w, p));
      }
      instances.push_back({&t, s, w, d.verdict});
    }
  }
  v.note = std::to_string(instances.size()) + " goals, " + std::to_string(oracle_yes) + " oracle-yes, " +
           std::to_string(entailed) + " entailed; " + std::to_string(missed) + " oracle-yes not entailed, " +
           std::to_string(unconfirmed) + " entailed but unconfirmed (in " +
           std::to_string(unconfirmed_theories.size()) + " theories)";
  if (missed + unconfirmed > 0) {
    v.pass = false;
    v.note += ": " + examples.substr(0, examples.size() - 2);
  }
  return v;
}

Outcome refutation_consistency() {
  Outcome v;
  auto p = build_precedence("abc");
  std::size_t unsat = 0, unknown = 0, mismatches = 0;
  for (const auto& inst : instances) {
    auto input = inst.theory->input;
    input.push_back(make_clause({Literal::neq(inst.s, inst.t, p)}, p));
    auto r = saturate(input, p, Limits{20000, 20000});
    if (r.status == SaturationStatus::LimitReached) ++unknown;
    if (r.refuted()) ++unsat;
    if (r.refuted() != (inst.decided == strsup::Verdict::Entailed)) {
      ++mismatches;
      v.fail(to_string(inst.s, p) + " = " + to_string(inst.t, p) + ": prove " +
             (r.refuted() ? "UNSAT" : r.saturated() ? "SAT" : "UNKNOWN"));
    }
  }
  if (instances.empty()) v.fail("no instances");
  if (v.pass)
    v.note = std::to_string(instances.size()) + " instances, " + std::to_string(unsat) + " UNSAT, 0 mismatches";
  else
    v.note = std::to_string(mismatches) + " mismatches (" + std::to_string(unknown) + " hit limits): " + v.note;
  return v;
}

// 10 ---------------------------------------------------------------------

Outcome performance() {
  Outcome v;
  auto p = build_precedence("abcde");
  const std::size_t n = 1000000;
  std::string ids(n, '\0');
  Gen g(1010);
  for (auto& c : ids) c = static_cast<char>(g.below(5));
  Str s = Str::from_ids(ids);
  ids.back() = static_cast<char>((ids.back() + 1) % 5);
  Str t = Str::from_ids(ids);
  auto t0 = Clock::now();
  Cmp c = cmp_str(s, t, p);
  double ms = seconds_since(t0) * 1e3;
  if (c == Cmp::Equal) v.fail("strings compared equal");
  if (ms >= 50.0) v.fail("took " + std::to_string(ms) + " ms");
  v.note = v.pass ? "1e6 symbols differing at the last position: " + std::to_string(ms) + " ms" : v.note;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  // Optional criterion numbers restrict the run, e.g. `acceptance 6 9`.
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "example 1 reproduction", example1},
      {2, "example 2 reproduction", example2},
      {3, "example 3 reproduction", example3},
      {4, "ordering laws", ordering_laws},
      {5, "matching oracle equivalence", matching},
      {6, "inference soundness", soundness},
      {7, "saturation audit", [] { build_theories(); return audit(); }},
      {8, "word-problem cross-check", word_problems},
      {9, "refutation-by-goal consistency", refutation_consistency},
      {10, "performance smoke", performance},
  };
  int failed = 0;
  std::size_t ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    ++ran;
    Outcome v;
    auto t0 = Clock::now();
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    if (!v.pass) ++failed;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.number, c.name, v.note.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(ran) - failed, ran);
  return failed == 0 ? 0 : 1;
}
