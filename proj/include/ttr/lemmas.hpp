#pragma once

// Exact checks of the two families of binomial inequalities that the
// column-maximum arguments lean on. Each claim is checked over its full index
// range; "decreasing" means strictly decreasing between consecutive indices.
//
// The binomial is a template parameter so tests can substitute a corrupted
// one and watch the checks fail.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ttr/certify.hpp"
#include "ttr/exact.hpp"

namespace ttr {

struct ExactBinomial {
  BigInt operator()(long a, long b) const { return binomial(a, b); }
};

struct LemmaOptions {
  /// Claim id whose comparison outcome is inverted. Used to exercise the
  /// failure path end to end; empty in normal runs.
  std::string negate_claim;
};

namespace detail {

class ClaimRecorder {
 public:
  ClaimRecorder(CertificationReport& rep, const LemmaOptions& opts) : rep_(rep), opts_(opts) {}

  void positive(std::string_view claim, long i, long j, const Rational& value) {
    record(claim, value > 0, i, j, value, Rational(0));
  }

  /// ratios[t] is the ratio at index first + t.
  void strictly_decreasing(std::string_view claim, long first, long j, const std::vector<Rational>& ratios) {
    for (std::size_t t = 0; t + 1 < ratios.size(); ++t)
      record(claim, ratios[t + 1] < ratios[t], first + static_cast<long>(t) + 1, j, ratios[t + 1], ratios[t]);
  }

  /// num/den, or a recorded failure when den is zero.
  std::optional<Rational> quotient(std::string_view claim, long i, long j, const Rational& num, const Rational& den) {
    if (den == 0) {
      rep_.fail(std::string(claim), i, j, num, den);
      return std::nullopt;
    }
    return num / den;
  }

 private:
  void record(std::string_view claim, bool ok, long i, long j, const Rational& lhs, const Rational& rhs) {
    if (claim == opts_.negate_claim) ok = !ok;
    if (!ok) rep_.fail(std::string(claim), i, j, lhs, rhs);
  }

  CertificationReport& rep_;
  const LemmaOptions& opts_;
};

inline void require_even_at_least(long n, long min_n, std::string_view what) {
  if (n % 2 != 0 || n < min_n)
    throw std::invalid_argument(std::string(what) + " needs an even n >= " + std::to_string(min_n) + ", got " +
                                std::to_string(n));
}

template <typename Binom>
CertificationReport lemma_1_impl(long n, const LemmaOptions& opts, Binom C, bool enforce) {
  if (enforce) require_even_at_least(n, 10, "binomial lemma 1");
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("binomial lemma 1 is only evaluated at even n >= 4");
  CertificationReport rep;
  rep.n = static_cast<std::size_t>(n);
  rep.in_hypothesis = n >= 10;
  ClaimRecorder rec(rep, opts);
  const long h = n / 2;
  auto f = [&](long i) -> Rational { return make_rational(C(n, i), BigInt(n)) - Rational(C(h - 1, i - h)); };

  for (long i = h + 1; i <= n - 1; ++i) rec.positive("lemma1-i", i, 0, f(i - 1));

  std::vector<Rational> r;
  for (long i = h + 1; i <= n - 2; ++i)
    if (auto q = rec.quotient("lemma1-ii", i, 0, f(i), f(i - 1))) r.push_back(*q);
  rec.strictly_decreasing("lemma1-ii", h + 1, 0, r);

  r.clear();
  for (long i = h + 2; i <= n - 2; ++i)
    if (auto q = rec.quotient("lemma1-iii", i, 0, f(i), f(i - 2))) r.push_back(*q);
  rec.strictly_decreasing("lemma1-iii", h + 2, 0, r);

  for (long j = 3; j <= n - 1; ++j) {
    r.clear();
    for (long i = 1; i <= j - 2; ++i)
      if (auto q = rec.quotient("lemma1-iv", i, j, Rational(C(n - i - 1, j - i - 1) - 1), Rational(C(n - i, j - i) - 1)))
        r.push_back(*q);
    rec.strictly_decreasing("lemma1-iv", 1, j, r);
  }
  return rep;
}

template <typename Binom>
CertificationReport lemma_2_impl(long n, const LemmaOptions& opts, Binom C, bool enforce) {
  if (enforce) require_even_at_least(n, 8, "binomial lemma 2");
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("binomial lemma 2 is only evaluated at even n >= 4");
  CertificationReport rep;
  rep.n = static_cast<std::size_t>(n);
  rep.in_hypothesis = n >= 8;
  ClaimRecorder rec(rep, opts);
  const long h = n / 2;
  // g(i) = C(n,i-1)/n - C(n/2, i-n/2)
  auto g = [&](long i) -> Rational { return make_rational(C(n, i - 1), BigInt(n)) - Rational(C(h, i - h)); };

  for (long i = h; i <= n - 2; ++i) rec.positive("lemma2-i", i, 0, g(i));

  std::vector<Rational> r;
  for (long i = h; i <= n - 3; ++i)
    if (auto q = rec.quotient("lemma2-ii", i, 0, g(i + 1), g(i))) r.push_back(*q);
  rec.strictly_decreasing("lemma2-ii", h, 0, r);

  r.clear();
  for (long i = h + 1; i <= n - 3; ++i)
    if (auto q = rec.quotient("lemma2-iii", i, 0, g(i + 1), g(i - 1))) r.push_back(*q);
  rec.strictly_decreasing("lemma2-iii", h + 1, 0, r);

  for (long j = 5; j <= n - 2; ++j) {
    r.clear();
    for (long i = 2; i <= j - 3; ++i)
      if (auto q = rec.quotient("lemma2-iv", i, j, Rational(C(n - i - 1, j - i - 1) - (n - i - 1)),
                                Rational(C(n - i, j - i) - (n - i))))
        r.push_back(*q);
    rec.strictly_decreasing("lemma2-iv", 2, j, r);
  }
  return rep;
}

}  // namespace detail

/// Claims ids lemma1-i .. lemma1-iv. Asserted for even n >= 10.
///   (i)   C(n,i-1)/n - C(n/2-1, i-1-n/2) > 0,               n/2+1 <= i <= n-1
///   (ii)  [C(n,i)/n - C(n/2-1,i-n/2)] / [same at i-1]  decreasing, n/2+1 <= i <= n-2
///   (iii) [C(n,i)/n - C(n/2-1,i-n/2)] / [same at i-2]  decreasing, n/2+2 <= i <= n-2
///   (iv)  (C(n-i-1,j-i-1) - 1) / (C(n-i,j-i) - 1)       decreasing in i, 1 <= i <= j-2, 3 <= j <= n-1
template <typename Binom = ExactBinomial>
CertificationReport check_binomial_lemma_1(long n, const LemmaOptions& opts = {}, Binom C = {}) {
  return detail::lemma_1_impl(n, opts, C, true);
}

/// Claim ids lemma2-i .. lemma2-iv. Asserted for even n >= 8.
///   (i)   C(n,i-1)/n - C(n/2, i-n/2) > 0,                    n/2 <= i <= n-2
///   (ii)  [C(n,i)/n - C(n/2,i+1-n/2)] / [C(n,i-1)/n - C(n/2,i-n/2)]   decreasing, n/2 <= i <= n-3
///   (iii) [C(n,i)/n - C(n/2,i+1-n/2)] / [C(n,i-2)/n - C(n/2,i-1-n/2)] decreasing, n/2+1 <= i <= n-3
///   (iv)  (C(n-i-1,j-i-1) - (n-i-1)) / (C(n-i,j-i) - (n-i))   decreasing in i, 2 <= i <= j-3, 5 <= j <= n-2
template <typename Binom = ExactBinomial>
CertificationReport check_binomial_lemma_2(long n, const LemmaOptions& opts = {}, Binom C = {}) {
  return detail::lemma_2_impl(n, opts, C, true);
}

/// Evaluates lemma 1 below its n >= 10 hypothesis; the report is flagged
/// out-of-hypothesis and never counts as a confirmation of the claim.
template <typename Binom = ExactBinomial>
CertificationReport evaluate_binomial_lemma_1(long n, const LemmaOptions& opts = {}, Binom C = {}) {
  return detail::lemma_1_impl(n, opts, C, false);
}

template <typename Binom = ExactBinomial>
CertificationReport evaluate_binomial_lemma_2(long n, const LemmaOptions& opts = {}, Binom C = {}) {
  return detail::lemma_2_impl(n, opts, C, false);
}

inline const std::vector<std::string>& lemma_claim_ids() {
  static const std::vector<std::string> ids{"lemma1-i", "lemma1-ii", "lemma1-iii", "lemma1-iv",
                                            "lemma2-i", "lemma2-ii", "lemma2-iii", "lemma2-iv"};
  return ids;
}

}  // namespace ttr
