#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "strsup/errors.hpp"
#include "strsup/frontend.hpp"
#include "strsup/saturation.hpp"
#include "strsup/wordproblem.hpp"

namespace {

enum Exit { Decided = 0, InputError = 1, Undecided = 2 };

struct Flags {
  std::string file;
  strsup::Limits limits;
  bool proof = false;
  bool print_saturated = false;
  bool trace = false;
};

strsup::Problem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return strsup::parse_problem(buf.str());
}

void print_clauses(const std::vector<strsup::Clause>& clauses, const strsup::Precedence& prec) {
  for (const auto& c : clauses) std::cout << c.id << ": " << strsup::to_string(c, prec) << '\n';
}

int run_prove(const Flags& f) {
  auto problem = load(f.file);
  const auto& prec = problem.precedence;
  strsup::SaturationOptions opts;
  if (f.trace)
    opts.trace = [&prec](const strsup::Clause& c) { std::cerr << strsup::format_log_line(c, prec) << '\n'; };
  auto result = strsup::saturate(strsup::refutation_input(problem), prec, f.limits, opts);

  switch (result.status) {
    case strsup::SaturationStatus::Refuted:
      std::cout << "UNSAT\n";
      if (f.proof) {
        for (const auto& step : strsup::replay_proof(result, prec).steps)
          std::cout << strsup::format_log_line(step, prec) << '\n';
      }
      return Decided;
    case strsup::SaturationStatus::Saturated:
      std::cout << "SAT\n";
      if (f.print_saturated) print_clauses(result.clauses, prec);
      return Decided;
    case strsup::SaturationStatus::LimitReached:
      std::cout << "UNKNOWN\n";
      return Undecided;
  }
  return Undecided;
}

int run_decide(const Flags& f) {
  auto problem = load(f.file);
  const auto& prec = problem.precedence;
  if (!problem.goal) throw std::runtime_error(f.file + ": decide needs a goal line");
  for (const auto& c : problem.clauses)
    if (!c.is_horn()) throw std::runtime_error(f.file + ": decide needs a Horn theory, got " + strsup::to_string(c, prec));

  auto d = strsup::prove_word(problem.clauses, *problem.goal, prec, f.limits);
  switch (d.verdict) {
    case strsup::Verdict::Entailed:
      std::cout << "ENTAILED\n";
      break;
    case strsup::Verdict::NotEntailed:
      std::cout << "NOT-ENTAILED\n";
      break;
    case strsup::Verdict::Unknown:
      std::cout << "UNKNOWN\n";
      break;
  }
  if (d.saturation) {
    if (f.trace)
      for (const auto& c : d.saturation->log.entries()) std::cerr << strsup::format_log_line(c, prec) << '\n';
    if (f.print_saturated && d.saturation->saturated()) print_clauses(d.saturation->clauses, prec);
  }
  if (f.trace) std::cerr << "goals explored: " << d.explored << '\n';
  if (f.proof)
    for (const auto& g : d.chain) std::cout << strsup::to_string(g.literal(prec), prec) << '\n';
  return d.verdict == strsup::Verdict::Unknown ? Undecided : Decided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superposition prover for clauses over strings"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&flags](CLI::App* sub) {
    sub->add_option("file", flags.file, "Problem file")->required();
    sub->add_option("--max-clauses", flags.limits.max_clauses, "Stop after this many clause ids");
    sub->add_option("--max-iters", flags.limits.max_iterations, "Stop after this many given clauses");
    sub->add_flag("--proof", flags.proof, "Print the proof");
    sub->add_flag("--print-saturated", flags.print_saturated, "Print the saturated set");
    sub->add_flag("--trace", flags.trace, "Log every derived clause to stderr");
  };
  auto* prove = app.add_subcommand("prove", "Refute the clauses, plus the negated goal if there is one");
  auto* decide = app.add_subcommand("decide", "Decide the goal of a Horn problem");
  add_common(prove);
  add_common(decide);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : InputError;
  }

  try {
    return prove->parsed() ? run_prove(flags) : run_decide(flags);
  } catch (const strsup::ParseError& e) {
    std::cerr << flags.file << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
  }
  return InputError;
}
