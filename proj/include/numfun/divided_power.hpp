#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/combination.hpp"
#include "numfun/deviation.hpp"
#include "numfun/matrix.hpp"
#include "numfun/modules.hpp"
#include "numfun/multiset.hpp"

namespace numfun {

/// Gamma^n(Z^k) with basis e^[A], |A| = n, in lexicographic order.
class GammaModule {
 public:
  GammaModule(std::size_t k, std::size_t n)
      : impl_(std::make_shared<Impl>(k, n)) {}

  std::size_t module_rank() const { return impl_->k; }
  std::size_t degree() const { return impl_->n; }
  std::size_t dimension() const { return impl_->basis.size(); }
  std::vector<Multiset> const& basis() const { return impl_->basis; }

  std::size_t index_of(Multiset const& a) const {
    auto it = impl_->index.find(a);
    if (it == impl_->index.end())
      throw std::out_of_range("multiset is not a divided basis index: " +
                              a.key());
    return it->second;
  }

  std::optional<std::size_t> endomorphism_side() const {
    std::size_t m = 0;
    while (m * m < impl_->k) ++m;
    if (m * m != impl_->k) return std::nullopt;
    return m;
  }

  friend bool operator==(GammaModule const& a, GammaModule const& b) {
    return a.impl_->k == b.impl_->k && a.impl_->n == b.impl_->n;
  }

 private:
  struct Impl {
    Impl(std::size_t k_, std::size_t n_)
        : k(k_), n(n_), basis(multisets_of_size(k_, n_)) {
      for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    }
    std::size_t k, n;
    std::vector<Multiset> basis;
    std::map<Multiset, std::size_t> index;
  };
  std::shared_ptr<Impl> impl_;
};

using GammaElement = BasisCombination<GammaModule>;

inline std::size_t dimension(GammaModule const& g) { return g.dimension(); }

/// Coordinates of x^[n]: the coefficient of e^[A] is prod_i c_i^{a_i}.
inline std::vector<Int> divided_power_vector(GammaModule const& space,
                                             std::span<Int const> x) {
  if (x.size() != space.module_rank())
    throw shape_error("divided_power: element length");
  std::vector<Int> out;
  out.reserve(space.dimension());
  for (auto const& a : space.basis()) {
    Int c = 1;
    for (auto const& e : a.entries()) {
      c *= power(x[e.index], e.multiplicity);
      if (c == 0) break;
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline GammaElement divided_power(GammaModule const& space, Element const& x) {
  auto v = divided_power_vector(space, x.coords());
  return GammaElement::from_vector(space, std::span<Int const>(v));
}

/// x_1 ... x_n as the n-th deviation of x -> x^[n].
inline GammaElement product_of_elements(GammaModule const& space,
                                        std::span<Element const> xs) {
  if (xs.size() != space.degree())
    throw std::invalid_argument("product_of_elements: need exactly n factors");
  Element zero(FreeModule{space.module_rank()});
  for (auto const& x : xs)
    if (x.module() != zero.module()) throw shape_error("product_of_elements");
  auto f = [&](Element const& p) { return divided_power(space, p); };
  return deviation_of(f, xs, zero);
}

inline GammaElement product_of_elements(GammaModule const& space,
                                        std::vector<Element> const& xs) {
  return product_of_elements(space, std::span<Element const>(xs));
}

namespace detail {

// Distinct rearrangements of a sorted word, in lexicographic order.
inline std::vector<std::vector<std::size_t>> distinct_permutations(
    std::vector<std::size_t> word) {
  std::vector<std::vector<std::size_t>> out;
  std::sort(word.begin(), word.end());
  do out.push_back(word);
  while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline std::size_t word_index(std::span<std::size_t const> w, std::size_t k) {
  std::size_t idx = 0;
  for (auto i : w) idx = idx * k + i;
  return idx;
}

inline std::size_t int_power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

/// Orbit-sum embedding Gamma^n(Z^k) -> (Z^k)^{(x)n}: e^[A] goes to the sum of
/// the distinct rearrangements of its word, tensors indexed lexicographically.
inline std::vector<Rat> embed_symmetric(GammaElement const& u) {
  std::size_t k = u.space().module_rank(), n = u.space().degree();
  std::vector<Rat> t(detail::int_power(k, n), 0);
  for (auto const& [a, c] : u.coeffs())
    for (auto const& w : detail::distinct_permutations(a.word()))
      t[detail::word_index(w, k)] += c;
  return t;
}

/// Reads the coefficient of each sorted pure tensor.
inline GammaElement project_symmetric(GammaModule const& space,
                                      std::span<Rat const> t) {
  std::size_t k = space.module_rank();
  if (t.size() != detail::int_power(k, space.degree()))
    throw shape_error("project_symmetric: tensor length");
  std::vector<Rat> v;
  v.reserve(space.dimension());
  for (auto const& a : space.basis()) {
    auto w = a.word();
    v.push_back(t[detail::word_index(w, k)]);
  }
  return GammaElement::from_vector(space, std::span<Rat const>(v));
}

/// True when t is invariant under permuting tensor factors.
inline bool is_symmetric_tensor(std::span<Rat const> t, std::size_t k,
                                std::size_t n) {
  std::vector<std::size_t> w(n, 0);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    std::size_t r = idx;
    for (std::size_t j = n; j-- > 0;) {
      w[j] = r % k;
      r /= k;
    }
    auto s = w;
    std::sort(s.begin(), s.end());
    if (t[idx] != t[detail::word_index(s, k)]) return false;
  }
  return true;
}

/// Matrix of Gamma^n(alpha) on divided bases. Applying alpha^{(x)n} to the
/// orbit sum of A and reading the sorted coefficient at B gives
/// sum over rearrangements w of A of prod_j alpha[b_j][w_j].
inline IntMatrix gamma_of_hom(Hom const& alpha, std::size_t n) {
  GammaModule src(alpha.source().rank, n), dst(alpha.target().rank, n);
  auto const& m = alpha.matrix();
  IntMatrix out(dst.dimension(), src.dimension());
  std::vector<std::vector<std::size_t>> targets;
  for (auto const& b : dst.basis()) targets.push_back(b.word());
  for (std::size_t c = 0; c < src.dimension(); ++c) {
    auto perms = detail::distinct_permutations(src.basis()[c].word());
    for (std::size_t r = 0; r < dst.dimension(); ++r) {
      auto const& b = targets[r];
      Int total = 0;
      for (auto const& w : perms) {
        Int p = 1;
        for (std::size_t j = 0; j < n && p != 0; ++j) p *= m(b[j], w[j]);
        total += p;
      }
      out(r, c) = std::move(total);
    }
  }
  return out;
}

/// Orbit sum of u in End(Z^m)^{(x)n} viewed as an m^n x m^n matrix. Index i of
/// Z^{m^2} is the matrix unit E_{i/m, i%m}.
inline RatMatrix symmetric_endomorphism(GammaElement const& u) {
  auto side = u.space().endomorphism_side();
  if (!side) throw shape_error("Gamma element is not over End(Z^m)");
  std::size_t m = *side, n = u.space().degree();
  std::size_t d = detail::int_power(m, n);
  RatMatrix out(d, d);
  for (auto const& [a, c] : u.coeffs())
    for (auto const& w : detail::distinct_permutations(a.word())) {
      std::size_t row = 0, col = 0;
      for (auto i : w) {
        row = row * m + i / m;
        col = col * m + i % m;
      }
      out(row, col) += c;
    }
  return out;
}

/// Inverse of symmetric_endomorphism on symmetric inputs.
inline GammaElement project_endomorphism(GammaModule const& space,
                                         RatMatrix const& t) {
  auto side = space.endomorphism_side();
  if (!side) throw shape_error("Gamma module is not over End(Z^m)");
  std::size_t m = *side;
  std::vector<Rat> v;
  v.reserve(space.dimension());
  for (auto const& a : space.basis()) {
    std::size_t row = 0, col = 0;
    for (auto i : a.word()) {
      row = row * m + i / m;
      col = col * m + i % m;
    }
    v.push_back(t(row, col));
  }
  return GammaElement::from_vector(space, std::span<Rat const>(v));
}

/// Product alpha^[n] * beta^[n] = (alpha beta)^[n] on Gamma^n(End Z^m).
inline GammaElement schur_product(GammaElement const& u,
                                  GammaElement const& v) {
  if (!(u.space() == v.space())) throw shape_error("schur_product: spaces");
  return project_endomorphism(u.space(), symmetric_endomorphism(u) *
                                             symmetric_endomorphism(v));
}

/// (1_{Z^m})^[n].
inline GammaElement gamma_identity(GammaModule const& space) {
  auto side = space.endomorphism_side();
  if (!side) throw shape_error("gamma_identity: rank is not a perfect square");
  return divided_power(space, flatten(IntMatrix::identity(*side)));
}

}  // namespace numfun
