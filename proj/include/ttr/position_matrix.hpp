#pragma once

// One-step and m-step card position distributions of the top-to-random
// shuffle with uniform insertion. Entry (j, k) is the probability that card j
// (initially at position j) sits at position k.

#include <stdexcept>
#include <vector>

#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/matrix.hpp"

namespace ttr {

inline ExactMatrix build_position_matrix(const DeckSpec& deck) {
  const std::size_t n = deck.n();
  const long nl = static_cast<long>(n);
  ExactMatrix p(n);
  for (std::size_t k = 1; k <= n; ++k) p(1, k) = make_rational(1, nl);
  for (std::size_t j = 2; j <= n; ++j) {
    const long jl = static_cast<long>(j);
    p(j, j - 1) = make_rational(nl - (jl - 1), nl);
    p(j, j) = make_rational(jl - 1, nl);
  }
  return p;
}

/// P^m from the explicit alternating binomial sums, no matrix products.
/// Every entry is assembled over the common denominator n^(m+1):
///   n^(m+1) P^m(j,k) = A_j + n^m                   for j < k
///   n^(m+1) P^m(j,k) = A_j + n B_{jk} + n^m        for k <= j
/// with A_j = sum_{i=2..j} (-1)^(j+i+1) (i-1)^m C(n-i, j-i) C(n, i-1)
/// and  B_jk = sum_{i=k..j} (-1)^(j+i) (i-1)^m C(n-i, j-i) C(n-k, i-k).
inline ExactMatrix power_closed_form(const DeckSpec& deck, unsigned long m) {
  if (m < 1) throw std::invalid_argument("closed form needs m >= 1");
  const long n = static_cast<long>(deck.n());

  std::vector<BigInt> pw(static_cast<std::size_t>(n) + 1);  // pw[i] = (i-1)^m
  for (long i = 1; i <= n; ++i) pw[i] = ipow(BigInt(i - 1), m);
  const BigInt n_m = ipow(BigInt(n), m);
  const BigInt denom = n_m * n;

  ExactMatrix out(deck.n());
  for (long j = 1; j <= n; ++j) {
    BigInt a = 0;
    for (long i = 2; i <= j; ++i) {
      BigInt term = pw[i] * binomial(n - i, j - i) * binomial(n, i - 1);
      if ((j + i + 1) % 2 == 0) a += term; else a -= term;
    }
    for (long k = 1; k <= n; ++k) {
      BigInt num = a + n_m;
      if (k <= j) {
        BigInt b = 0;
        for (long i = k; i <= j; ++i) {
          BigInt term = pw[i] * binomial(n - i, j - i) * binomial(n - k, i - k);
          if ((j + i) % 2 == 0) b += term; else b -= term;
        }
        num += b * n;
      }
      out(j, k) = make_rational(num, denom);
    }
  }
  return out;
}

}  // namespace ttr
