#pragma once

// Exact scalars and the integer combinatorics everything else is built on.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ttr {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

/// "num/den" in lowest terms; zero is "0/1" and integers keep the "/1".
inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// base^exp with the convention 0^0 = 1 and 0^m = 0 for m >= 1.
inline BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational ipow(const Rational& base, unsigned long exp) {
  return Rational(ipow(BigInt(base.get_num()), exp), ipow(BigInt(base.get_den()), exp));
}

/// Accepts "a/b", a plain integer, or a finite decimal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  static const std::regex fraction(R"(^([+-]?)(\d+)/(\d+)$)");
  static const std::regex decimal(R"(^([+-]?)(\d*)(?:\.(\d*))?$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    BigInt num(m[2].str(), 10);
    if (m[1] == "-") num = -num;
    return make_rational(num, BigInt(m[3].str(), 10));
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    std::string frac = m[3].str();
    BigInt num(m[2].str() + frac, 10);
    if (m[1] == "-") num = -num;
    return make_rational(num, ipow(BigInt(10), frac.size()));
  }
  throw std::invalid_argument("malformed rational: " + s);
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// C(a, b); zero outside 0 <= b <= a.
inline BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// n (n-1) ... (n-k+1); empty product is 1.
inline BigInt falling_factorial(long n, long k) {
  if (k < 0) throw std::domain_error("falling factorial with negative length");
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

/// Stirling numbers of the second kind by the row recurrence
/// S(m,k) = k S(m-1,k) + S(m-1,k-1), S(0,0) = 1.
inline BigInt stirling2(long m, long k) {
  if (m < 0 || k < 0) throw std::domain_error("stirling2 with negative argument");
  if (k > m) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, BigInt(0));
  row[0] = 1;
  for (long r = 1; r <= m; ++r) {
    long top = std::min(r, k);
    for (long c = top; c >= 1; --c) row[c] = BigInt(c) * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace ttr
