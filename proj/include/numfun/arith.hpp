#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numfun/multiset.hpp"

namespace numfun {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(Rat const& q) { return q.get_den() == 1; }

inline std::string to_string(Int const& v) { return v.get_str(); }
inline std::string to_string(Rat const& v) { return v.get_str(); }

inline Int factorial(std::size_t n) {
  Int r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

inline Int power(Int const& base, std::size_t exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// r(r-1)...(r-k+1)/k!, valid for negative r.
inline Int binomial(Int const& r, std::size_t k) {
  Int out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= r - static_cast<unsigned long>(i);
    // Product of i+1 consecutive integers is divisible by (i+1)!.
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(),
                    static_cast<unsigned long>(i + 1));
  }
  return out;
}

inline Int binomial(long r, std::size_t k) { return binomial(Int(r), k); }

/// Product over the support of X of binomial(a_i, mult_X(i)).
inline Int multiset_binomial(std::span<Int const> a, Multiset const& x) {
  Int out = 1;
  for (auto const& e : x.entries()) {
    if (e.index >= a.size())
      throw std::out_of_range("multiset_binomial: index out of range");
    out *= binomial(a[e.index], e.multiplicity);
    if (out == 0) break;
  }
  return out;
}

/// Stirling numbers of the second kind.
inline Int stirling2(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  std::vector<Int> row(m + 1, 0);
  row[0] = 1;  // S(0,0)
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, m); j >= 1; --j)
      row[j] = static_cast<unsigned long>(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[m];
}

/// sum_{r=0}^{m} (-1)^{m-r} C(m,r) r^n, with 0^0 = 1.
inline Int stirling_sum_identity(std::size_t n, std::size_t m) {
  Int total = 0;
  for (std::size_t r = 0; r <= m; ++r) {
    Int term = binomial(Int(static_cast<unsigned long>(m)), r) *
               power(Int(static_cast<unsigned long>(r)), n);
    if ((m - r) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

}  // namespace numfun
