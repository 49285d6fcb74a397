// Prints the best no-feedback guess for every position of a 10-card deck at a
// few shuffle counts, together with the exact expected score.

#include <iostream>

#include "ttr/position_matrix.hpp"
#include "ttr/strategy.hpp"

int main() {
  const ttr::DeckSpec deck(10);
  for (unsigned long m : {1UL, 10UL, 30UL, 100UL}) {
    const ttr::ExactMatrix pm = ttr::power_closed_form(deck, m);
    const ttr::Strategy best = ttr::optimal_strategy(pm);
    std::cout << "m=" << m << "  guesses:";
    for (std::size_t card : best.guesses()) std::cout << ' ' << card;
    std::cout << "  expected correct: " << ttr::expected_correct(pm, best).get_d() << '\n';
  }
}
