#pragma once

#include <stdexcept>
#include <vector>

#include "ttr/deck.hpp"
#include "ttr/exact.hpp"
#include "ttr/matrix.hpp"

namespace ttr {

/// Right eigenvectors of the position matrix as the columns of `e`, the
/// matching eigenvalues, and the closed-form inverse of `e`.
struct EigenSystem {
  ExactMatrix e;
  std::vector<Rational> eigenvalues;  // eigenvalues[k-1] belongs to column k
  ExactMatrix e_inv;
};

/// Component j of eigenvector k:
///   (-1)^(n+j) C(n-k, j-k) for j >= k, k < n;  0 for j < k;  1 for k = n.
inline BigInt eigenvector_component(long n, long k, long j) {
  if (k == n) return 1;
  if (j < k) return 0;
  BigInt c = binomial(n - k, j - k);
  return ((n + j) % 2 == 0) ? c : BigInt(-c);
}

inline EigenSystem eigen_system(const DeckSpec& deck) {
  const std::size_t n = deck.n();
  const long nl = static_cast<long>(n);
  EigenSystem sys{ExactMatrix(n), {}, ExactMatrix(n)};

  for (long j = 1; j <= nl; ++j)
    for (long k = 1; k <= nl; ++k) sys.e(j, k) = Rational(eigenvector_component(nl, k, j));

  sys.eigenvalues.reserve(n);
  for (long k = 1; k < nl; ++k) sys.eigenvalues.push_back(make_rational(k - 1, nl));
  sys.eigenvalues.push_back(Rational(1));

  // Row j < n of the inverse: v_k(j) - s_j/n for k <= j and -s_j/n beyond,
  // with s_j = sum_{i<=j} v_i(j). The last row is constant 1/n.
  for (long j = 1; j < nl; ++j) {
    BigInt s = 0;
    for (long i = 1; i <= j; ++i) s += eigenvector_component(nl, i, j);
    const Rational shift = make_rational(s, BigInt(nl));
    for (long k = 1; k <= nl; ++k) {
      Rational v = (k <= j) ? Rational(eigenvector_component(nl, k, j)) : Rational(0);
      sys.e_inv(j, k) = v - shift;
    }
  }
  for (long k = 1; k <= nl; ++k) sys.e_inv(n, k) = make_rational(1, nl);
  return sys;
}

/// E D^m E^{-1}.
inline ExactMatrix power_spectral(const EigenSystem& sys, unsigned long m) {
  if (m < 1) throw std::invalid_argument("spectral power needs m >= 1");
  const std::size_t n = sys.e.size();
  ExactMatrix scaled = sys.e;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational lam = ipow(sys.eigenvalues[k - 1], m);
    for (std::size_t j = 1; j <= n; ++j) scaled(j, k) *= lam;
  }
  return mat_mul(scaled, sys.e_inv);
}

inline ExactMatrix power_spectral(const DeckSpec& deck, unsigned long m) {
  if (m < 1) throw std::invalid_argument("spectral power needs m >= 1");
  return power_spectral(eigen_system(deck), m);
}

}  // namespace ttr
