#pragma once

// Monte Carlo top-to-random shuffling. Deliberately self-contained: nothing
// here touches the exact matrix code, so it can serve as an independent check
// on it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ttr {

/// Engine identifier recorded with every simulation result. Lane l of a run
/// with seed s uses std::mt19937_64 seeded from
/// std::seed_seq{s & 0xffffffff, s >> 32, l}; both are fully specified by the
/// C++ standard, so streams are identical across conforming implementations.
inline constexpr const char* kGeneratorId = "mt19937_64/seed_seq(seed_lo,seed_hi,lane)";

class LaneRng {
 public:
  LaneRng(std::uint64_t seed, std::uint32_t lane) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffULL), static_cast<std::uint32_t>(seed >> 32), lane};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [1, n] by rejection, so there is no modulo bias.
  std::uint64_t uniform_1_to(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform draw from an empty range");
    // Largest multiple of n that fits in 2^64, expressed as 2^64 - (2^64 mod n).
    const std::uint64_t reject_from = -(-n % n);  // 0 means no rejection needed
    for (;;) {
      const std::uint64_t x = engine_();
      if (reject_from == 0 || x < reject_from) return x % n + 1;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Moves the top card so that it ends up at `position` (1 = stays on top).
inline void shuffle_in_place(std::vector<std::size_t>& deck, std::size_t position) {
  if (position < 1 || position > deck.size())
    throw std::out_of_range("insertion position " + std::to_string(position) + " outside 1.." +
                            std::to_string(deck.size()));
  std::rotate(deck.begin(), deck.begin() + 1, deck.begin() + static_cast<std::ptrdiff_t>(position));
}

inline std::vector<std::size_t> shuffle_once(std::vector<std::size_t> deck_state, std::size_t position) {
  shuffle_in_place(deck_state, position);
  return deck_state;
}

struct SimConfig {
  std::size_t n = 2;
  unsigned long m = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// guesses[k-1] is the card guessed at position k.
  std::optional<std::vector<std::size_t>> guesses;
  std::uint32_t lanes = 1;

  void validate() const {
    if (n < 2) throw std::invalid_argument("simulation needs n >= 2");
    if (trials < 1) throw std::invalid_argument("simulation needs at least one trial");
    if (lanes < 1) throw std::invalid_argument("simulation needs at least one lane");
    if (guesses) {
      if (guesses->size() != n) throw std::invalid_argument("strategy length does not match deck size");
      for (std::size_t g : *guesses)
        if (g < 1 || g > n) throw std::invalid_argument("strategy guess outside 1..n");
    }
  }
};

struct SimResult {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint32_t lanes = 1;
  std::string generator = kGeneratorId;
  std::vector<std::uint64_t> counts;  // row-major, counts[(j-1)*n + (k-1)]
  std::uint64_t correct_total = 0;

  std::uint64_t count(std::size_t card, std::size_t position) const { return counts.at((card - 1) * n + position - 1); }

  double frequency(std::size_t card, std::size_t position) const {
    return static_cast<double>(count(card, position)) / static_cast<double>(trials);
  }

  double mean_correct() const { return static_cast<double>(correct_total) / static_cast<double>(trials); }

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

namespace detail {

inline void run_lane(const SimConfig& cfg, std::uint32_t lane, std::uint64_t trials, std::vector<std::uint64_t>& counts,
                     std::uint64_t& correct) {
  const std::size_t n = cfg.n;
  LaneRng rng(cfg.seed, lane);
  std::vector<std::size_t> deck(n);
  counts.assign(n * n, 0);
  correct = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(deck.begin(), deck.end(), std::size_t{1});
    for (unsigned long s = 0; s < cfg.m; ++s) shuffle_in_place(deck, static_cast<std::size_t>(rng.uniform_1_to(n)));
    for (std::size_t pos = 1; pos <= n; ++pos) {
      const std::size_t card = deck[pos - 1];
      ++counts[(card - 1) * n + pos - 1];
      if (cfg.guesses && (*cfg.guesses)[pos - 1] == card) ++correct;
    }
  }
}

}  // namespace detail

/// Independent restarts from the ordered deck. Trials are split across lanes
/// (the first trials % lanes lanes take one extra) and lane totals are summed
/// in lane order, so the result depends only on the config.
inline SimResult run_simulation(const SimConfig& cfg) {
  cfg.validate();
  const std::uint32_t lanes = cfg.lanes;
  std::vector<std::vector<std::uint64_t>> lane_counts(lanes);
  std::vector<std::uint64_t> lane_correct(lanes, 0);

  auto lane_trials = [&](std::uint32_t l) { return cfg.trials / lanes + (l < cfg.trials % lanes ? 1 : 0); };

  if (lanes == 1) {
    detail::run_lane(cfg, 0, cfg.trials, lane_counts[0], lane_correct[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(lanes);
    for (std::uint32_t l = 0; l < lanes; ++l)
      workers.emplace_back(
          [&, l] { detail::run_lane(cfg, l, lane_trials(l), lane_counts[l], lane_correct[l]); });
  }

  SimResult out;
  out.n = cfg.n;
  out.trials = cfg.trials;
  out.seed = cfg.seed;
  out.lanes = lanes;
  out.counts.assign(cfg.n * cfg.n, 0);
  for (std::uint32_t l = 0; l < lanes; ++l) {
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += lane_counts[l][i];
    out.correct_total += lane_correct[l];
  }
  return out;
}

}  // namespace ttr
