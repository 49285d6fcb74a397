#pragma once

// No-feedback guessing strategies. Without feedback the expected score is a
// sum of independent per-position terms, so a per-column argmax is optimal.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/matrix.hpp"
#include "ttr/position_matrix.hpp"

namespace ttr {

/// guess(k) is the card label guessed at position k. Repeats are legal.
class Strategy {
 public:
  explicit Strategy(std::vector<std::size_t> guesses) : guesses_(std::move(guesses)) {
    const std::size_t n = guesses_.size();
    for (std::size_t g : guesses_)
      if (g < 1 || g > n) throw std::invalid_argument("guess " + std::to_string(g) + " outside 1.." + std::to_string(n));
  }

  std::size_t size() const noexcept { return guesses_.size(); }
  std::size_t guess(std::size_t position) const { return guesses_.at(position - 1); }
  const std::vector<std::size_t>& guesses() const noexcept { return guesses_; }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<std::size_t> guesses_;
};

/// Card n-1 for the top half of the positions, card n for the bottom half.
inline Strategy paper_strategy(const DeckSpec& deck) {
  deck.require_even(4);
  const std::size_t n = deck.n();
  std::vector<std::size_t> g(n);
  for (std::size_t k = 1; k <= n; ++k) g[k - 1] = (k <= n / 2) ? n - 1 : n;
  return Strategy(std::move(g));
}

/// Per-position argmax, ties going to the smallest card label.
template <typename T>
Strategy optimal_strategy(const Matrix<T>& pm) {
  const std::size_t n = pm.size();
  std::vector<std::size_t> g(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t best = 1;
    for (std::size_t j = 2; j <= n; ++j)
      if (pm(j, k) > pm(best, k)) best = j;
    g[k - 1] = best;
  }
  return Strategy(std::move(g));
}

template <typename T>
T expected_correct(const Matrix<T>& pm, const Strategy& s) {
  if (pm.size() != s.size()) throw std::invalid_argument("expected_correct: strategy length does not match deck size");
  T total(0);
  for (std::size_t k = 1; k <= pm.size(); ++k) total += pm(s.guess(k), k);
  return total;
}

/// Expected correct guesses under the half-and-half strategy minus the
/// uniform-deck baseline of one.
inline Rational expectation_gap(const DeckSpec& deck, unsigned long m) {
  if (m < 1) throw std::invalid_argument("expectation gap needs m >= 1");
  return expected_correct(power_closed_form(deck, m), paper_strategy(deck)) - 1;
}

}  // namespace ttr
