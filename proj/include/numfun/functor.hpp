#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/deviation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/gamma_epsilon.hpp"
#include "numfun/matrix.hpp"
#include "numfun/modules.hpp"
#include "numfun/multiset.hpp"

namespace numfun {

/// One of T^n, S^n, Lambda^n, Gamma^n, a constant Z^rank, or a direct sum.
struct FunctorSpec {
  enum class Kind { Tensor, Sym, Ext, Div, Const, Sum };
  Kind kind = Kind::Const;
  std::size_t param = 0;  // n, or the rank of a constant
  std::vector<FunctorSpec> parts;

  static FunctorSpec tensor(std::size_t n) { return {Kind::Tensor, n, {}}; }
  static FunctorSpec sym(std::size_t n) { return {Kind::Sym, n, {}}; }
  static FunctorSpec ext(std::size_t n) { return {Kind::Ext, n, {}}; }
  static FunctorSpec div(std::size_t n) { return {Kind::Div, n, {}}; }
  static FunctorSpec constant(std::size_t rank) {
    return {Kind::Const, rank, {}};
  }
  static FunctorSpec sum(std::vector<FunctorSpec> parts) {
    if (parts.empty()) throw std::invalid_argument("empty direct sum");
    return {Kind::Sum, 0, std::move(parts)};
  }

  /// Polynomial degree: n for the homogeneous kinds, 0 for constants.
  std::size_t degree() const {
    switch (kind) {
      case Kind::Const: return 0;
      case Kind::Sum: {
        std::size_t d = 0;
        for (auto const& p : parts) d = std::max(d, p.degree());
        return d;
      }
      default: return param;
    }
  }

  /// Homogeneous of degree d: every summand is T, S, Lambda or Gamma of
  /// degree d (a constant counts as degree 0).
  bool is_homogeneous_of(std::size_t d) const {
    if (kind == Kind::Sum)
      return std::all_of(parts.begin(), parts.end(),
                         [d](auto const& p) { return p.is_homogeneous_of(d); });
    return degree() == d;
  }

  std::string name() const {
    switch (kind) {
      case Kind::Tensor: return "T" + std::to_string(param);
      case Kind::Sym: return "S" + std::to_string(param);
      case Kind::Ext: return "L" + std::to_string(param);
      case Kind::Div: return "G" + std::to_string(param);
      case Kind::Const: return "Z" + std::to_string(param);
      case Kind::Sum: {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
          s += (i ? "+" : "") + parts[i].name();
        return s + ")";
      }
    }
    return {};
  }

  friend bool operator==(FunctorSpec const&, FunctorSpec const&) = default;
};

inline std::size_t object_dim(FunctorSpec const& spec, std::size_t q) {
  using K = FunctorSpec::Kind;
  std::size_t n = spec.param;
  switch (spec.kind) {
    case K::Tensor: return detail::int_power(q, n);
    case K::Sym:
    case K::Div:
      return binomial(Int(static_cast<long>(q + n) - 1), n).get_ui();
    case K::Ext: return binomial(Int(static_cast<unsigned long>(q)), n).get_ui();
    case K::Const: return n;
    case K::Sum: {
      std::size_t d = 0;
      for (auto const& p : spec.parts) d += object_dim(p, q);
      return d;
    }
  }
  return 0;
}

namespace detail {

// Strictly increasing n-tuples over [q], lexicographic.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t q,
                                                               std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n > q) return out;
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] == q - n + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < n; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

inline IntMatrix tensor_power(IntMatrix const& a, std::size_t n) {
  IntMatrix out = IntMatrix::identity(1);
  for (std::size_t i = 0; i < n; ++i) out = kronecker(out, a);
  return out;
}

// S^n(alpha)[B][A] = sum over rearrangements w of B of prod_j alpha[w_j][a_j].
inline IntMatrix symmetric_power(IntMatrix const& a, std::size_t n) {
  auto src = multisets_of_size(a.cols(), n);
  auto dst = multisets_of_size(a.rows(), n);
  IntMatrix out(dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r) {
    auto perms = distinct_permutations(dst[r].word());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto aw = src[c].word();
      Int total = 0;
      for (auto const& w : perms) {
        Int p = 1;
        for (std::size_t j = 0; j < n && p != 0; ++j) p *= a(w[j], aw[j]);
        total += p;
      }
      out(r, c) = std::move(total);
    }
  }
  return out;
}

inline IntMatrix exterior_power(IntMatrix const& a, std::size_t n) {
  auto src = increasing_tuples(a.cols(), n);
  auto dst = increasing_tuples(a.rows(), n);
  IntMatrix out(dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) {
      IntMatrix minor(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) minor(i, j) = a(dst[r][i], src[c][j]);
      out(r, c) = determinant(minor);
    }
  return out;
}

inline IntMatrix block_diagonal(std::vector<IntMatrix> const& blocks) {
  std::size_t rows = 0, cols = 0;
  for (auto const& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (auto const& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

}  // namespace detail

/// F(alpha) for alpha : Z^p -> Z^q, an object_dim(q) x object_dim(p) matrix.
inline IntMatrix arrow_map(FunctorSpec const& spec, Hom const& alpha) {
  using K = FunctorSpec::Kind;
  auto const& a = alpha.matrix();
  switch (spec.kind) {
    case K::Tensor: return detail::tensor_power(a, spec.param);
    case K::Sym: return detail::symmetric_power(a, spec.param);
    case K::Ext: return detail::exterior_power(a, spec.param);
    case K::Div: return gamma_of_hom(alpha, spec.param);
    case K::Const: return IntMatrix::identity(spec.param);
    case K::Sum: {
      std::vector<IntMatrix> blocks;
      for (auto const& p : spec.parts) blocks.push_back(arrow_map(p, alpha));
      return detail::block_diagonal(blocks);
    }
  }
  return {};
}

/// The arrow map on Hom(Z^p, Z^q) as a set map between flattened matrices.
inline SetMap arrow_setmap(FunctorSpec const& spec, std::size_t p,
                           std::size_t q) {
  std::size_t dp = object_dim(spec, p), dq = object_dim(spec, q);
  return SetMap(FreeModule{q * p}, FreeModule{dq * dp},
                [spec, p, q](Element const& x) {
                  return flatten(arrow_map(spec, Hom(unflatten(x, q, p))));
                });
}

/// Deviation F(alpha_1 | ... | alpha_m) of the arrow map, as a matrix.
inline IntMatrix arrow_deviation(FunctorSpec const& spec,
                                 std::vector<IntMatrix> const& args,
                                 std::size_t p, std::size_t q) {
  std::vector<Element> flat;
  for (auto const& a : args) flat.push_back(flatten(a));
  auto d = deviation(arrow_setmap(spec, p, q), flat);
  return unflatten(d, object_dim(spec, q), object_dim(spec, p));
}

struct CertificateOptions {
  std::uint64_t seed = 0;
  std::size_t tuples_per_shape = 4;
  std::size_t homs_per_shape = 2;
  long entry_lo = -2, entry_hi = 2;
};

/// Degree-n certificate for a catalog functor: conditions A' and B' at the
/// identity of Z^n over r in [-(n+2), n+2], conditions A and B at seeded
/// homs, and vanishing of the (n+1)-st deviation on seeded hom tuples of
/// shapes p, q in {1, 2, 3}.
inline DeviationReport degree_certificate(FunctorSpec const& spec,
                                          std::size_t n,
                                          CertificateOptions const& opt = {}) {
  DeviationReport rep;
  rep.degree_tested = n;
  long w = static_cast<long>(n) + 2;

  // Scaling conditions on one hom alpha : Z^p -> Z^q.
  auto scaling = [&](IntMatrix const& alpha, std::string const& tag) {
    std::size_t p = alpha.cols(), q = alpha.rows();
    SetMap phi = arrow_setmap(spec, p, q);
    Element x = flatten(alpha);
    std::vector<Element> devs;
    for (std::size_t k = 0; k <= n; ++k)
      devs.push_back(repeated_deviation(phi, x, k));
    std::map<std::size_t, Element> multiples;
    for (std::size_t m = 0; m <= n; ++m)
      multiples.emplace(m, phi(Int(static_cast<unsigned long>(m)) * x));
    for (long r = -w; r <= w; ++r) {
      ++rep.samples_used;
      Element lhs = phi(Int(r) * x);
      Element a(phi.target());
      for (std::size_t k = 0; k <= n; ++k) a += binomial(Int(r), k) * devs[k];
      if (lhs != a) {
        rep.fail({"condition A" + tag, {x.coords()}, Int(r)});
        return false;
      }
      if (lhs != condition_B_rhs(multiples, Int(r), n)) {
        rep.fail({"condition B" + tag, {x.coords()}, Int(r)});
        return false;
      }
    }
    return true;
  };

  if (!scaling(IntMatrix::identity(n), "'")) return rep;

  std::mt19937_64 rng(opt.seed);
  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q)
      for (std::size_t t = 0; t < opt.homs_per_shape; ++t)
        if (!scaling(detail::random_matrix(rng, q, p, opt.entry_lo,
                                           opt.entry_hi),
                     ""))
          return rep;

  for (std::size_t p = 1; p <= 3; ++p)
    for (std::size_t q = 1; q <= 3; ++q) {
      SetMap phi = arrow_setmap(spec, p, q);
      for (std::size_t t = 0; t < opt.tuples_per_shape; ++t) {
        std::vector<Element> args;
        for (std::size_t i = 0; i <= n; ++i)
          args.push_back(flatten(
              detail::random_matrix(rng, q, p, opt.entry_lo, opt.entry_hi)));
        ++rep.samples_used;
        if (!deviation(phi, args).is_zero()) {
          Witness wit{"vanishing deviation", {}, std::nullopt};
          for (auto const& a : args) wit.arguments.push_back(a.coords());
          rep.fail(std::move(wit));
          return rep;
        }
      }
    }
  return rep;
}

/// Both sides of the multiset deviation formula
/// F(a_1 alpha_1 | ... | a_k alpha_k) = sum_{#X=[k], |X|<=n} binom(a, X) F(nabla_X alpha).
inline bool multiset_formula_holds(SetMap const& phi,
                                   std::vector<Element> const& alphas,
                                   std::vector<Int> const& a, std::size_t n) {
  std::size_t k = alphas.size();
  std::vector<Element> scaled;
  for (std::size_t i = 0; i < k; ++i) scaled.push_back(a[i] * alphas[i]);
  Element lhs = deviation(phi, scaled);
  Element rhs(phi.target());
  for (auto const& x : multisets_with_full_support(k, n)) {
    Int c = multiset_binomial(std::span<Int const>(a), x);
    if (c != 0)
      rhs += c * multiset_deviation(phi, std::span<Element const>(alphas), x);
  }
  return lhs == rhs;
}

/// The three displayed identities characterising a cubic functor, written
/// out term by term for one, two and three arguments.
inline bool cubic_formulae_hold(SetMap const& phi,
                                std::vector<Element> const& alpha,
                                std::vector<Int> const& a) {
  auto dev = [&](std::vector<Element> const& xs) { return deviation(phi, xs); };
  auto const &x1 = alpha[0], &x2 = alpha[1], &x3 = alpha[2];
  auto b = [](Int const& r, std::size_t k) { return binomial(r, k); };

  Element one = b(a[0], 1) * dev({x1}) + b(a[0], 2) * dev({x1, x1}) +
                b(a[0], 3) * dev({x1, x1, x1});
  if (dev({a[0] * x1}) != one) return false;

  Element two = b(a[0], 1) * b(a[1], 1) * dev({x1, x2}) +
                b(a[0], 2) * b(a[1], 1) * dev({x1, x1, x2}) +
                b(a[0], 1) * b(a[1], 2) * dev({x1, x2, x2});
  if (dev({a[0] * x1, a[1] * x2}) != two) return false;

  Element three =
      b(a[0], 1) * b(a[1], 1) * b(a[2], 1) * dev({x1, x2, x3});
  return dev({a[0] * x1, a[1] * x2, a[2] * x3}) == three;
}

/// Catalog used by the verification suites: T, S, Lambda, Gamma in degrees
/// 1..max_n, plus a constant.
inline std::vector<FunctorSpec> catalog(std::size_t max_n) {
  std::vector<FunctorSpec> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    out.push_back(FunctorSpec::tensor(n));
    out.push_back(FunctorSpec::sym(n));
    out.push_back(FunctorSpec::ext(n));
    out.push_back(FunctorSpec::div(n));
  }
  out.push_back(FunctorSpec::constant(1));
  return out;
}

}  // namespace numfun
