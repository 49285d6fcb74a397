#pragma once

// Command implementations behind the `ttr` executable. Each returns the
// record to print plus an exit status; argument parsing lives in the tool.
//
// Exit codes: 0 success, 1 certification failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttr/certify.hpp"
#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/lemmas.hpp"
#include "ttr/matrix.hpp"
#include "ttr/mixing.hpp"
#include "ttr/output.hpp"
#include "ttr/position_matrix.hpp"
#include "ttr/simulator.hpp"
#include "ttr/spectral.hpp"
#include "ttr/strategy.hpp"

namespace ttr {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Invalid invocation: maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutcome {
  OutputRecord record;
  int exit_code = kExitOk;
  std::string diagnostic;  // for stderr; empty on clean success
};

namespace detail {

inline DeckSpec deck_or_usage(long n) {
  if (n < 2) throw UsageError("--n must be at least 2");
  return DeckSpec(static_cast<std::size_t>(n));
}

inline DeckSpec even_deck_or_usage(long n) {
  if (n < 4 || n % 2 != 0) throw UsageError("--n must be an even integer >= 4, got " + std::to_string(n));
  return DeckSpec(static_cast<std::size_t>(n));
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string describe(const ClaimFailure& f) {
  return f.claim + " j=" + std::to_string(f.j) + " k=" + std::to_string(f.k) + " lhs=" + to_string(f.lhs) +
         " rhs=" + to_string(f.rhs);
}

inline std::string failure_cell(const CertificationReport& rep) {
  if (rep.holds()) return "";
  const auto& f = rep.failures.front();
  return f.claim + ":" + std::to_string(f.j) + ":" + std::to_string(f.k);
}

}  // namespace detail

enum class PowerMethod { closed, power, spectral };

inline PowerMethod parse_method(const std::string& s) {
  if (s == "closed") return PowerMethod::closed;
  if (s == "power") return PowerMethod::power;
  if (s == "spectral") return PowerMethod::spectral;
  throw UsageError("unknown method '" + s + "' (expected closed, power or spectral)");
}

inline ExactMatrix compute_power(const DeckSpec& deck, unsigned long m, PowerMethod method) {
  switch (method) {
    case PowerMethod::closed: return power_closed_form(deck, m);
    case PowerMethod::spectral: return power_spectral(deck, m);
    default: return mat_pow(build_position_matrix(deck), m);
  }
}

struct MatrixArgs {
  long n = 0;
  long m = 0;
  std::string method = "closed";
  bool verify = false;
  bool with_float = false;
};

inline CommandOutcome cmd_matrix(const MatrixArgs& a) {
  const DeckSpec deck = detail::deck_or_usage(a.n);
  const PowerMethod method = parse_method(a.method);
  if (a.m < 0) throw UsageError("--m must be non-negative");
  if (a.m == 0 && (method != PowerMethod::power || a.verify))
    throw UsageError("m = 0 is only defined for --method power (and cannot be verified against the other methods)");
  const auto m = static_cast<unsigned long>(a.m);

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "matrix";
  rec.params = {{"n", std::to_string(a.n)}, {"m", std::to_string(a.m)}, {"method", a.method},
                {"verify", detail::yes_no(a.verify)}};

  const ExactMatrix pm = compute_power(deck, m, method);
  if (a.verify) {
    const bool agree = power_closed_form(deck, m) == pm && power_spectral(deck, m) == pm &&
                       mat_pow(build_position_matrix(deck), m) == pm;
    if (!agree) {
      out.exit_code = kExitCertificationFailure;
      out.diagnostic = "methods disagree for n=" + std::to_string(a.n) + " m=" + std::to_string(a.m);
    }
  }

  rec.columns = {"j", "k", "value"};
  if (a.with_float) rec.columns.push_back("value_float");
  for (std::size_t j = 1; j <= deck.n(); ++j)
    for (std::size_t k = 1; k <= deck.n(); ++k) {
      std::vector<std::string> row{std::to_string(j), std::to_string(k), to_string(pm(j, k))};
      if (a.with_float) row.push_back(format_float(pm(j, k)));
      rec.add_row(std::move(row));
    }
  return out;
}

struct StrategyArgs {
  long n = 0;
  long m = 0;
};

inline CommandOutcome cmd_strategy(const StrategyArgs& a) {
  const DeckSpec deck = detail::even_deck_or_usage(a.n);
  if (a.m < 1) throw UsageError("--m must be at least 1");
  const auto m = static_cast<unsigned long>(a.m);
  const ExactMatrix pm = power_closed_form(deck, m);
  const Strategy greedy = optimal_strategy(pm);
  const Strategy paper = paper_strategy(deck);
  const CertificationReport rep = certify_strategy_on(pm, paper, m);

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "strategy";
  rec.params = {{"n", std::to_string(a.n)}, {"m", std::to_string(a.m)}};
  rec.columns = {"position", "greedy_card", "greedy_prob", "paper_card", "paper_prob", "paper_attains_max"};
  for (std::size_t k = 1; k <= deck.n(); ++k) {
    const Rational& best = pm(greedy.guess(k), k);
    const Rational& mine = pm(paper.guess(k), k);
    rec.add_row({std::to_string(k), std::to_string(greedy.guess(k)), to_string(best), std::to_string(paper.guess(k)),
                 to_string(mine), detail::yes_no(mine == best)});
  }
  rec.summary = {{"verdict", rep.holds() ? "HOLDS" : "FAILS"},
                 {"in_hypothesis", detail::yes_no(deck.n() >= 10 && m >= strategy_threshold(deck.n()))},
                 {"paper_bound", std::to_string(strategy_threshold(deck.n()))}};
  return out;
}

struct ScanArgs {
  long n = 0;
  long m_max = 0;
};

inline CommandOutcome cmd_scan(const ScanArgs& a) {
  const DeckSpec deck = detail::even_deck_or_usage(a.n);
  if (a.m_max < 1) throw UsageError("--m-max must be at least 1");
  const ScanResult scan = scan_strategy_threshold(deck, static_cast<unsigned long>(a.m_max));

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "scan";
  rec.params = {{"n", std::to_string(a.n)}, {"m_max", std::to_string(a.m_max)}};
  rec.columns = {"m", "holds", "gap", "gap_float"};
  for (const auto& p : scan.points)
    rec.add_row({std::to_string(p.m), detail::yes_no(p.holds), to_string(p.gap), format_float(p.gap)});
  rec.summary = {{"m_star", scan.m_star ? std::to_string(*scan.m_star) : "none"},
                 {"paper_bound", std::to_string(scan.paper_bound)},
                 {"m_star_within_bound", detail::yes_no(scan.m_star_within_bound())}};
  return out;
}

struct ExpectationArgs {
  long n = 0;
  long m = 0;
  std::string strategy = "paper";
  std::optional<std::string> c;
};

inline CommandOutcome cmd_expectation(const ExpectationArgs& a) {
  if (a.strategy != "paper" && a.strategy != "greedy")
    throw UsageError("unknown strategy '" + a.strategy + "' (expected paper or greedy)");
  const DeckSpec deck = a.strategy == "paper" ? detail::even_deck_or_usage(a.n) : detail::deck_or_usage(a.n);
  if (a.m < 1) throw UsageError("--m must be at least 1");
  std::optional<Rational> c;
  if (a.c) {
    try {
      c = parse_rational(*a.c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--c: ") + e.what());
    }
    if (*c < 0) throw UsageError("--c must be non-negative");
  }
  const auto m = static_cast<unsigned long>(a.m);
  const ExactMatrix pm = power_closed_form(deck, m);
  const Strategy s = a.strategy == "paper" ? paper_strategy(deck) : optimal_strategy(pm);
  const Rational expected = expected_correct(pm, s);
  const Rational gap = expected - 1;

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "expectation";
  rec.params = {{"n", std::to_string(a.n)}, {"m", std::to_string(a.m)}, {"strategy", a.strategy}};
  rec.columns = {"n", "m", "strategy", "expected", "expected_float", "gap", "gap_float"};
  std::vector<std::string> row{std::to_string(a.n), std::to_string(a.m), a.strategy, to_string(expected),
                               format_float(expected), to_string(gap), format_float(gap)};
  if (c) {
    rec.params.emplace_back("c", to_string(*c));
    const RationalInterval bound = exp_neg_enclosure(*c, default_enclosure_width());
    const BoundVerdict verdict = compare_gap(gap, bound);
    rec.columns.insert(rec.columns.end(), {"c", "bound_lo", "bound_hi", "bound_lo_float", "verdict"});
    row.insert(row.end(), {to_string(*c), to_string(bound.lo), to_string(bound.hi), format_float(bound.lo),
                           to_string(verdict)});
    const long double cl = static_cast<long double>(to_double(*c));
    rec.summary = {{"verdict", to_string(verdict)},
                   {"threshold_m", std::to_string(strategy_threshold(deck.n(), cl))},
                   {"in_hypothesis", detail::yes_no(deck.n() >= 10 && deck.even() &&
                                                    m >= strategy_threshold(deck.n(), cl))}};
    if (verdict != BoundVerdict::holds) {
      out.exit_code = kExitCertificationFailure;
      out.diagnostic = std::string("gap bound ") + to_string(verdict) + ": gap=" + to_string(gap);
    }
  }
  rec.add_row(std::move(row));
  return out;
}

struct VerifyArgs {
  long n_max = 0;
  LemmaOptions lemma_options;
};

/// Both binomial lemma families over every even n in their hypothesis range
/// up to n_max, plus the row monotonicity checks at the c = 0 thresholds for
/// every even n in [4, n_max].
template <typename Binom = ExactBinomial>
CommandOutcome cmd_verify(const VerifyArgs& a, Binom binom = {}) {
  if (a.n_max < 4) throw UsageError("--n-max must be at least 4");
  if (!a.lemma_options.negate_claim.empty()) {
    const auto& ids = lemma_claim_ids();
    if (std::find(ids.begin(), ids.end(), a.lemma_options.negate_claim) == ids.end())
      throw UsageError("unknown claim id '" + a.lemma_options.negate_claim + "'");
  }

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "verify";
  rec.params = {{"n_max", std::to_string(a.n_max)}};
  if (!a.lemma_options.negate_claim.empty()) rec.params.emplace_back("negate_claim", a.lemma_options.negate_claim);
  rec.columns = {"check", "n", "m", "holds", "in_hypothesis", "failures", "first_failure"};

  std::ostringstream diag;
  std::size_t failed = 0;
  auto add = [&](const std::string& check, long n, const std::string& m, const CertificationReport& rep) {
    rec.add_row({check, std::to_string(n), m, detail::yes_no(rep.holds()), detail::yes_no(rep.in_hypothesis),
                 std::to_string(rep.failures.size()), detail::failure_cell(rep)});
    if (!rep.holds()) {
      ++failed;
      diag << check << " n=" << n << ": " << detail::describe(rep.failures.front()) << '\n';
    }
  };

  for (long n = 10; n <= a.n_max; n += 2) add("lemma1", n, "", check_binomial_lemma_1(n, a.lemma_options, binom));
  for (long n = 8; n <= a.n_max; n += 2) add("lemma2", n, "", check_binomial_lemma_2(n, a.lemma_options, binom));
  for (long n = 4; n <= a.n_max; n += 2) {
    const DeckSpec deck(static_cast<std::size_t>(n));
    const long double nl = static_cast<long double>(n);
    const unsigned long m_last = first_integer_above(nl * std::log(nl));
    const unsigned long m_rows = first_integer_above(nl * std::log(2 * nl));
    add("last-row-increasing", n, std::to_string(m_last), check_last_row_increasing(deck, m_last));
    add("rows-decreasing", n, std::to_string(m_rows), check_all_rows_decreasing(deck, m_rows));
  }

  rec.summary = {{"checks", std::to_string(rec.rows.size())}, {"failed", std::to_string(failed)},
                 {"verdict", failed == 0 ? "HOLDS" : "FAILS"}};
  if (failed) {
    out.exit_code = kExitCertificationFailure;
    out.diagnostic = diag.str();
  }
  return out;
}

struct SimulateArgs {
  long n = 0;
  long m = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
  std::string strategy = "none";
  long lanes = 1;
};

/// Largest deck for which the exact comparison columns are computed.
inline constexpr long kExactComparisonMaxN = 16;

inline CommandOutcome cmd_simulate(const SimulateArgs& a) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  if (a.m < 0) throw UsageError("--m must be non-negative");
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.lanes < 1 || a.lanes > 1024) throw UsageError("--lanes must be in 1..1024");
  if (a.strategy != "none" && a.strategy != "paper" && a.strategy != "greedy")
    throw UsageError("unknown strategy '" + a.strategy + "' (expected none, paper or greedy)");

  const DeckSpec deck(static_cast<std::size_t>(a.n));
  const auto m = static_cast<unsigned long>(a.m);
  const bool exact_mode = a.n <= kExactComparisonMaxN;
  std::optional<ExactMatrix> pm;
  if (exact_mode) pm = m == 0 ? ExactMatrix::identity(deck.n()) : power_closed_form(deck, m);

  std::optional<Strategy> strategy;
  if (a.strategy == "paper") {
    strategy = paper_strategy(detail::even_deck_or_usage(a.n));
  } else if (a.strategy == "greedy") {
    if (!exact_mode) throw UsageError("--strategy greedy needs n <= " + std::to_string(kExactComparisonMaxN));
    strategy = optimal_strategy(*pm);
  }

  SimConfig cfg;
  cfg.n = deck.n();
  cfg.m = m;
  cfg.trials = static_cast<std::uint64_t>(a.trials);
  cfg.seed = a.seed;
  cfg.lanes = static_cast<std::uint32_t>(a.lanes);
  if (strategy) cfg.guesses = strategy->guesses();
  const SimResult sim = run_simulation(cfg);

  CommandOutcome out;
  OutputRecord& rec = out.record;
  rec.command = "simulate";
  rec.params = {{"n", std::to_string(a.n)},           {"m", std::to_string(a.m)},
                {"trials", std::to_string(a.trials)}, {"seed", std::to_string(a.seed)},
                {"strategy", a.strategy},             {"lanes", std::to_string(a.lanes)}};
  rec.metadata = {{"generator", sim.generator}, {"seed", std::to_string(sim.seed)},
                  {"lanes", std::to_string(sim.lanes)}, {"n", std::to_string(a.n)},
                  {"m", std::to_string(a.m)},           {"trials", std::to_string(sim.trials)}};
  rec.columns = {"j", "k", "count", "freq"};
  if (exact_mode) rec.columns.insert(rec.columns.end(), {"exact", "exact_float", "abs_dev", "within_4sigma"});

  double max_dev = 0;
  std::size_t within = 0;
  const double trials = static_cast<double>(sim.trials);
  for (std::size_t j = 1; j <= deck.n(); ++j)
    for (std::size_t k = 1; k <= deck.n(); ++k) {
      const double f = sim.frequency(j, k);
      std::vector<std::string> row{std::to_string(j), std::to_string(k), std::to_string(sim.count(j, k)),
                                   format_float(f)};
      if (exact_mode) {
        const double p = to_double((*pm)(j, k));
        const double dev = std::fabs(f - p);
        const bool ok = dev <= 4.0 * std::sqrt(p * (1.0 - p) / trials);
        max_dev = std::max(max_dev, dev);
        within += ok ? 1 : 0;
        row.insert(row.end(), {to_string((*pm)(j, k)), format_float(p), format_float(dev), detail::yes_no(ok)});
      }
      rec.add_row(std::move(row));
    }

  if (exact_mode) {
    rec.summary.emplace_back("max_abs_dev", format_float(max_dev));
    rec.summary.emplace_back("cells_within_4sigma", std::to_string(within) + "/" + std::to_string(deck.n() * deck.n()));
  }
  if (strategy) {
    rec.summary.emplace_back("correct_total", std::to_string(sim.correct_total));
    rec.summary.emplace_back("mean_correct", format_float(sim.mean_correct()));
    if (exact_mode) {
      const Rational exact = expected_correct(*pm, *strategy);
      rec.summary.emplace_back("exact_expected", to_string(exact));
      rec.summary.emplace_back("exact_expected_float", format_float(exact));
    }
  }
  return out;
}

}  // namespace ttr
