#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ttr {

/// Number of cards in the deck. Matrix-level code accepts any n >= 2; the
/// guessing-strategy layer additionally requires an even deck.
class DeckSpec {
 public:
  explicit DeckSpec(std::size_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("deck needs at least 2 cards, got " + std::to_string(n));
  }

  std::size_t n() const noexcept { return n_; }
  bool even() const noexcept { return n_ % 2 == 0; }

  /// Throws unless n is even and at least `min_n`.
  const DeckSpec& require_even(std::size_t min_n = 4) const {
    if (!even() || n_ < min_n)
      throw std::invalid_argument("strategy layer needs an even deck with n >= " + std::to_string(min_n) +
                                  ", got n=" + std::to_string(n_));
    return *this;
  }

 private:
  std::size_t n_;
};

}  // namespace ttr
