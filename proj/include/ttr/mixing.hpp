#pragma once

// Comparison of the exact expectation gap against e^{-c}. The transcendental
// side is replaced by a rational enclosure so every verdict is exact.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "ttr/certify.hpp"
#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/strategy.hpp"

namespace ttr {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Rational [lo, hi] containing e^{-c}, c >= 0, with hi - lo <= max_width.
///
/// Partial sums S_N of the exponential series bound e^c from below, and for
/// N + 2 > c the tail is at most c^(N+1)/(N+1)! * (N+2)/(N+2-c), giving
/// e^{-c} in [1/(S_N + R_N), 1/S_N].
inline RationalInterval exp_neg_enclosure(const Rational& c, const Rational& max_width) {
  if (c < 0) throw std::domain_error("exp_neg_enclosure needs c >= 0");
  if (max_width <= 0) throw std::domain_error("exp_neg_enclosure needs a positive width");
  if (c == 0) return {Rational(1), Rational(1)};

  Rational term = 1;  // c^N / N!
  Rational sum = 1;
  for (unsigned long big_n = 0;; ++big_n) {
    if (big_n > 0) {
      term *= c;
      term /= big_n;
      sum += term;
    }
    const Rational next_index = big_n + 2;
    if (next_index <= c) continue;
    const Rational tail = term * c / (big_n + 1) * next_index / (next_index - c);
    RationalInterval iv{1 / (sum + tail), 1 / sum};
    if (iv.width() <= max_width) return iv;
  }
}

enum class BoundVerdict { holds, fails, indeterminate };

inline const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds: return "HOLDS";
    case BoundVerdict::fails: return "FAILS";
    default: return "INDETERMINATE";
  }
}

/// gap <= lo holds, gap > hi fails, anything in between is undecided at the
/// enclosure width.
inline BoundVerdict compare_gap(const Rational& gap, const RationalInterval& bound) {
  if (gap <= bound.lo) return BoundVerdict::holds;
  if (gap > bound.hi) return BoundVerdict::fails;
  return BoundVerdict::indeterminate;
}

inline const Rational& default_enclosure_width() {
  static const Rational w = make_rational(BigInt(1), ipow(BigInt(10), 12));
  return w;
}

struct MixingBoundResult {
  unsigned long m = 0;
  Rational c;
  Rational gap;
  RationalInterval bound;
  BoundVerdict verdict = BoundVerdict::indeterminate;
  CertificationReport report;
};

/// Gap at the given m against e^{-c}.
inline MixingBoundResult check_gap_bound(const DeckSpec& deck, unsigned long m, const Rational& c) {
  MixingBoundResult r;
  r.m = m;
  r.c = c;
  r.gap = expectation_gap(deck, m);
  r.bound = exp_neg_enclosure(c, default_enclosure_width());
  r.verdict = compare_gap(r.gap, r.bound);
  r.report.n = deck.n();
  r.report.m = m;
  r.report.in_hypothesis = deck.n() >= 10 && m >= strategy_threshold(deck.n(), static_cast<long double>(to_double(c)));
  if (r.verdict != BoundVerdict::holds) r.report.fail("gap-bound", 0, 0, r.gap, r.bound.lo);
  return r;
}

/// Gap at m = floor(4 n ln n + c n) + 1 against e^{-c}.
inline MixingBoundResult check_mixing_bound(const DeckSpec& deck, const Rational& c) {
  deck.require_even(4);
  if (c < 0) throw std::domain_error("mixing bound needs c >= 0");
  return check_gap_bound(deck, strategy_threshold(deck.n(), static_cast<long double>(to_double(c))), c);
}

}  // namespace ttr
