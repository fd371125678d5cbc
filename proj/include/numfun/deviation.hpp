#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/modules.hpp"
#include "numfun/multiset.hpp"

namespace numfun {

/// Sum over subsets I of the argument list of (-1)^(m-|I|) f(sum_{i in I} x_i).
/// With no arguments this is f(zero).
template <class Fn, class Arg>
auto deviation_of(Fn const& f, std::span<Arg const> args, Arg const& zero)
    -> decltype(f(zero)) {
  std::size_t m = args.size();
  if (m >= 8 * sizeof(std::size_t) - 1)
    throw std::length_error("deviation: too many arguments");
  std::size_t subsets = std::size_t{1} << m;
  std::vector<Arg> sums;
  sums.reserve(subsets);
  sums.push_back(zero);
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::size_t low = mask & (~mask + 1);
    std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(low));
    sums.push_back(sums[mask ^ low] + args[bit]);
  }
  auto total = f(sums[0]);
  if (m % 2 == 1) total = -total;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    auto v = f(sums[mask]);
    std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((m - size) % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

/// Argument list repeating xs[i] mult_X(i) times.
template <class Arg>
std::vector<Arg> expand_multiset(std::span<Arg const> xs, Multiset const& x) {
  std::vector<Arg> out;
  for (auto const& e : x.entries()) {
    if (e.index >= xs.size())
      throw std::out_of_range("multiset deviation: index out of range");
    out.insert(out.end(), e.multiplicity, xs[e.index]);
  }
  return out;
}

inline Element deviation(SetMap const& phi, std::span<Element const> args) {
  for (auto const& a : args)
    if (a.module() != phi.source())
      throw shape_error("deviation: argument outside the source module");
  return deviation_of(phi, args, Element(phi.source()));
}

inline Element deviation(SetMap const& phi, std::vector<Element> const& args) {
  return deviation(phi, std::span<Element const>(args));
}

inline Element repeated_deviation(SetMap const& phi, Element const& x,
                                  std::size_t k) {
  std::vector<Element> args(k, x);
  return deviation(phi, args);
}

inline Element multiset_deviation(SetMap const& phi,
                                  std::span<Element const> xs,
                                  Multiset const& x) {
  return deviation(phi, expand_multiset(xs, x));
}

/// Newton form: sum_k C(r,k) * (k-th forward difference at 0) from the
/// values F(0), ..., F(n).
template <class V>
V condition_a_rhs(std::span<V const> values, Int const& r, std::size_t n) {
  if (values.size() < n + 1) throw std::invalid_argument("condition A: values");
  V total = Int(0) * values[0];
  for (std::size_t k = 0; k <= n; ++k) {
    V diff = Int(0) * values[0];
    for (std::size_t j = 0; j <= k; ++j) {
      Int c = binomial(Int(static_cast<unsigned long>(k)), j);
      if ((k - j) % 2 == 1) c = -c;
      diff += c * values[j];
    }
    total += binomial(r, k) * diff;
  }
  return total;
}

/// sum_m (-1)^(n-m) C(r,m) C(r-m-1, n-m) F(m).
template <class V>
V condition_b_rhs(std::span<V const> values, Int const& r, std::size_t n) {
  if (values.size() < n + 1)
    throw std::invalid_argument("condition B: missing value");
  V total = Int(0) * values[0];
  for (std::size_t m = 0; m <= n; ++m) {
    Int c = binomial(r, m) *
            binomial(Int(r - static_cast<unsigned long>(m) - 1), n - m);
    if ((n - m) % 2 == 1) c = -c;
    total += c * values[m];
  }
  return total;
}

inline Element condition_B_rhs(std::map<std::size_t, Element> const& values,
                               Int const& r, std::size_t n) {
  std::vector<Element> v;
  for (std::size_t m = 0; m <= n; ++m) {
    auto it = values.find(m);
    if (it == values.end())
      throw std::invalid_argument("condition B: missing value");
    v.push_back(it->second);
  }
  return condition_b_rhs(std::span<Element const>(v), r, n);
}

/// Where a sampled condition failed.
struct Witness {
  std::string condition;
  std::vector<std::vector<Int>> arguments;
  std::optional<Int> scalar;
};

struct DeviationReport {
  std::size_t degree_tested = 0;
  std::size_t samples_used = 0;
  bool passed = true;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (passed) {
      passed = false;
      witness = std::move(w);
    }
  }
};

/// Finite argument sample: tuples drawn from generators, scalars from
/// [lo, hi].
struct SampleSpec {
  std::vector<std::vector<Int>> generators;
  long scalar_lo = 0;
  long scalar_hi = 0;
};

namespace detail {

// Each nondecreasing index tuple of length len over [0, count) once.
template <class Visit>
bool for_each_multiset_tuple(std::size_t count, std::size_t len,
                             Visit const& visit) {
  for (auto const& x : multisets_of_size(count, len))
    if (!visit(x.word())) return false;
  return true;
}

}  // namespace detail

/// Checks the vanishing (n+1)-st deviation and the scaling equation
/// phi(r x) = sum_k C(r,k) phi(nabla_k x) on the sample. Deviations are
/// symmetric, so argument tuples are taken up to order.
inline DeviationReport is_numerical_degree(SetMap const& phi, std::size_t n,
                                           SampleSpec const& sample) {
  DeviationReport rep;
  rep.degree_tested = n;
  std::vector<Element> gens;
  for (auto const& g : sample.generators)
    gens.emplace_back(phi.source(), g);

  detail::for_each_multiset_tuple(
      gens.size(), n + 1, [&](std::vector<std::size_t> const& idx) {
        std::vector<Element> args;
        for (auto i : idx) args.push_back(gens[i]);
        ++rep.samples_used;
        if (!deviation(phi, args).is_zero()) {
          Witness w{"vanishing deviation", {}, std::nullopt};
          for (auto const& a : args) w.arguments.push_back(a.coords());
          rep.fail(std::move(w));
          return false;
        }
        return true;
      });
  if (!rep.passed) return rep;

  for (auto const& x : gens) {
    std::vector<Element> devs;
    for (std::size_t k = 0; k <= n; ++k)
      devs.push_back(repeated_deviation(phi, x, k));
    for (long r = sample.scalar_lo; r <= sample.scalar_hi; ++r) {
      ++rep.samples_used;
      Element rhs(phi.target());
      for (std::size_t k = 0; k <= n; ++k)
        rhs += binomial(Int(r), k) * devs[k];
      if (phi(Int(r) * x) != rhs) {
        rep.fail({"scaling equation", {x.coords()}, Int(r)});
        return rep;
      }
    }
  }
  return rep;
}

/// Given F(r) = F(r alpha) on a window of scalars containing 0..n, checks
/// condition A (Newton/deviation form) and condition B (interpolation form)
/// against F at every r in [lo, hi].
template <class V>
DeviationReport cross_check_conditions(std::map<long, V> const& f_on_scalars,
                                       std::size_t n, long lo, long hi,
                                       std::vector<Int> const& context = {}) {
  DeviationReport rep;
  rep.degree_tested = n;
  std::vector<V> base;
  for (std::size_t m = 0; m <= n; ++m) {
    auto it = f_on_scalars.find(static_cast<long>(m));
    if (it == f_on_scalars.end())
      throw std::invalid_argument("cross_check_conditions: window lacks 0..n");
    base.push_back(it->second);
  }
  std::span<V const> bs(base);
  for (long r = lo; r <= hi; ++r) {
    auto it = f_on_scalars.find(r);
    if (it == f_on_scalars.end())
      throw std::invalid_argument("cross_check_conditions: window gap");
    ++rep.samples_used;
    if (condition_a_rhs(bs, Int(r), n) != it->second) {
      rep.fail({"condition A", {context}, Int(r)});
      return rep;
    }
    if (condition_b_rhs(bs, Int(r), n) != it->second) {
      rep.fail({"condition B", {context}, Int(r)});
      return rep;
    }
  }
  return rep;
}

}  // namespace numfun
