#pragma once

// Exact checks of the structural claims about P^m: which card attains each
// column maximum, and how rows of P^m vary across positions.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/matrix.hpp"
#include "ttr/position_matrix.hpp"
#include "ttr/strategy.hpp"

namespace ttr {

/// One violated comparison. The meaning of (j, k) depends on the claim: a
/// (card, position) pair for matrix claims, index pairs for binomial claims.
struct ClaimFailure {
  std::string claim;
  long j = 0;
  long k = 0;
  Rational lhs;
  Rational rhs;
};

struct CertificationReport {
  std::size_t n = 0;
  unsigned long m = 0;
  /// False when the inputs fall outside the range where the claim is asserted;
  /// the checks still run and report what exact arithmetic says.
  bool in_hypothesis = true;
  std::vector<ClaimFailure> failures;

  bool holds() const noexcept { return failures.empty(); }

  void fail(std::string claim, long j, long k, Rational lhs, Rational rhs) {
    failures.push_back({std::move(claim), j, k, std::move(lhs), std::move(rhs)});
  }

  /// Appends another report's failures.
  void absorb(const CertificationReport& other) {
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    in_hypothesis = in_hypothesis && other.in_hypothesis;
  }
};

/// Smallest integer strictly above `bound`.
inline unsigned long first_integer_above(long double bound) {
  if (bound < 0) return 0;
  return static_cast<unsigned long>(std::floor(bound)) + 1;
}

/// First m with m > 4 n ln n + c n.
inline unsigned long strategy_threshold(std::size_t n, long double c = 0) {
  const long double nl = static_cast<long double>(n);
  return first_integer_above(4 * nl * std::log(nl) + c * nl);
}

/// The half-and-half strategy attains the maximum of every column of `pm`
/// (ties allowed).
inline CertificationReport certify_strategy_on(const ExactMatrix& pm, const Strategy& s, unsigned long m = 0) {
  CertificationReport rep;
  rep.n = pm.size();
  rep.m = m;
  for (std::size_t k = 1; k <= pm.size(); ++k) {
    std::size_t best = 1;
    for (std::size_t j = 2; j <= pm.size(); ++j)
      if (pm(j, k) > pm(best, k)) best = j;
    const Rational& chosen = pm(s.guess(k), k);
    if (chosen < pm(best, k))
      rep.fail("strategy-column-max", static_cast<long>(best), static_cast<long>(k), chosen, pm(best, k));
  }
  return rep;
}

inline CertificationReport certify_paper_strategy(const DeckSpec& deck, unsigned long m) {
  const Strategy s = paper_strategy(deck);
  if (m < 1) throw std::invalid_argument("certification needs m >= 1");
  auto rep = certify_strategy_on(power_closed_form(deck, m), s, m);
  rep.in_hypothesis = deck.n() >= 10 && m >= strategy_threshold(deck.n());
  return rep;
}

/// P^m(n, k+1) > P^m(n, k) for every k < n.
inline CertificationReport check_last_row_increasing(const DeckSpec& deck, unsigned long m, const ExactMatrix& pm) {
  CertificationReport rep;
  rep.n = deck.n();
  rep.m = m;
  const std::size_t n = deck.n();
  for (std::size_t k = 1; k < n; ++k)
    if (!(pm(n, k + 1) > pm(n, k)))
      rep.fail("last-row-increasing", static_cast<long>(n), static_cast<long>(k), pm(n, k + 1), pm(n, k));
  return rep;
}

inline CertificationReport check_last_row_increasing(const DeckSpec& deck, unsigned long m) {
  if (m < 1) throw std::invalid_argument("monotonicity check needs m >= 1");
  auto rep = check_last_row_increasing(deck, m, power_closed_form(deck, m));
  const long double nl = static_cast<long double>(deck.n());
  rep.in_hypothesis = deck.even() && deck.n() >= 4 && m >= first_integer_above(nl * std::log(nl));
  return rep;
}

/// Row j of P^m is non-increasing in k, with the step from k to k+1
///   strictly positive for k < j,
///   strictly positive for k = j when j > 1 (it equals ((j-1)/n)^m),
///   exactly zero for k = j = 1 and for every k > j.
inline CertificationReport check_row_decreasing(const DeckSpec& deck, unsigned long m, std::size_t j,
                                                const ExactMatrix& pm) {
  const std::size_t n = deck.n();
  if (j < 1 || j >= n) throw std::invalid_argument("row check needs 1 <= j <= n-1, got j=" + std::to_string(j));
  CertificationReport rep;
  rep.n = n;
  rep.m = m;
  for (std::size_t k = 1; k < n; ++k) {
    const Rational step = pm(j, k) - pm(j, k + 1);
    const bool strict = k < j || (k == j && j > 1);
    const bool ok = strict ? step > 0 : step == 0;
    if (!ok)
      rep.fail(strict ? "row-strictly-decreasing" : "row-flat", static_cast<long>(j), static_cast<long>(k), pm(j, k),
               pm(j, k + 1));
  }
  return rep;
}

inline CertificationReport check_row_decreasing(const DeckSpec& deck, unsigned long m, std::size_t j) {
  if (j < 1 || j >= deck.n()) throw std::invalid_argument("row check needs 1 <= j <= n-1, got j=" + std::to_string(j));
  if (m < 1) throw std::invalid_argument("monotonicity check needs m >= 1");
  auto rep = check_row_decreasing(deck, m, j, power_closed_form(deck, m));
  const long double nl = static_cast<long double>(deck.n());
  rep.in_hypothesis = deck.even() && deck.n() >= 4 && m >= first_integer_above(nl * std::log(2 * nl));
  return rep;
}

/// Every row j < n at once, sharing one P^m.
inline CertificationReport check_all_rows_decreasing(const DeckSpec& deck, unsigned long m) {
  if (m < 1) throw std::invalid_argument("monotonicity check needs m >= 1");
  const ExactMatrix pm = power_closed_form(deck, m);
  CertificationReport rep;
  rep.n = deck.n();
  rep.m = m;
  for (std::size_t j = 1; j < deck.n(); ++j) rep.absorb(check_row_decreasing(deck, m, j, pm));
  const long double nl = static_cast<long double>(deck.n());
  rep.in_hypothesis = deck.even() && deck.n() >= 4 && m >= first_integer_above(nl * std::log(2 * nl));
  return rep;
}

struct ScanPoint {
  unsigned long m = 0;
  bool holds = false;
  Rational gap;  // expected score of the half-and-half strategy minus one
};

struct ScanResult {
  std::size_t n = 0;
  std::vector<ScanPoint> points;
  /// Smallest m* such that the strategy is certified for every m in
  /// [m*, m_max]; empty if it fails at m_max.
  std::optional<unsigned long> m_star;
  unsigned long paper_bound = 0;

  bool m_star_within_bound() const { return m_star && *m_star <= paper_bound; }
};

inline ScanResult scan_strategy_threshold(const DeckSpec& deck, unsigned long m_max) {
  if (m_max < 1) throw std::invalid_argument("scan needs m_max >= 1");
  const Strategy s = paper_strategy(deck);
  ScanResult out;
  out.n = deck.n();
  out.paper_bound = strategy_threshold(deck.n());
  out.points.reserve(m_max);
  for (unsigned long m = 1; m <= m_max; ++m) {
    const ExactMatrix pm = power_closed_form(deck, m);
    out.points.push_back({m, certify_strategy_on(pm, s, m).holds(), expected_correct(pm, s) - 1});
  }
  for (auto it = out.points.rbegin(); it != out.points.rend() && it->holds; ++it) out.m_star = it->m;
  return out;
}

}  // namespace ttr
