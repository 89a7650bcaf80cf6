#ifndef VAK_RATIONAL_HPP
#define VAK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vak {

// Exact rational scalar. Always kept canonical: lowest terms, denominator > 0.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rational& x) { return x.get_str(); }

inline BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Generalized binomial coefficient: n may be any integer, k >= 0.
// binom(n, k) = n (n-1) ... (n-k+1) / k!, always an integer.
inline BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt num = 1;
  for (long i = 0; i < k; ++i) num *= BigInt(n - i);
  BigInt den = factorial(k);
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// (-1)^e for any integer e.
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace vak

#endif
