#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/combination.hpp"
#include "numfun/deviation.hpp"
#include "numfun/matrix.hpp"
#include "numfun/modules.hpp"
#include "numfun/multiset.hpp"

namespace numfun {

/// sum_{m=0}^{n} C(k+m-1, m): number of multisets over [k] of size <= n.
inline std::size_t aug_dimension(std::size_t k, std::size_t n) {
  Int d = 0;
  for (std::size_t m = 0; m <= n; ++m)
    d += binomial(Int(static_cast<long>(k + m) - 1), m);
  return d.get_ui();
}

/// B[Z^k]_n with deviation basis [nabla_X e], |X| <= n.
class AugAlgebra {
 public:
  AugAlgebra(std::size_t k, std::size_t n)
      : impl_(std::make_shared<Impl>(k, n)) {}

  std::size_t module_rank() const { return impl_->k; }
  std::size_t degree() const { return impl_->n; }
  std::size_t dimension() const { return impl_->basis.size(); }
  std::vector<Multiset> const& basis() const { return impl_->basis; }

  std::size_t index_of(Multiset const& x) const {
    auto it = impl_->index.find(x);
    if (it == impl_->index.end())
      throw std::out_of_range("multiset is not a basis index: " + x.key());
    return it->second;
  }
  bool is_basis_index(Multiset const& x) const {
    return impl_->index.count(x) != 0;
  }

  /// Side length m when k = m^2, i.e. this is B[End Z^m]_n.
  std::optional<std::size_t> endomorphism_side() const {
    std::size_t m = 0;
    while (m * m < impl_->k) ++m;
    if (m * m != impl_->k) return std::nullopt;
    return m;
  }

  friend bool operator==(AugAlgebra const& a, AugAlgebra const& b) {
    return a.impl_->k == b.impl_->k && a.impl_->n == b.impl_->n;
  }

  /// Memoized matrix of left product multiplication by basis element i.
  template <class Build>
  IntMatrix const& left_product_matrix(std::size_t i, Build const& build) const {
    std::lock_guard lock(impl_->mutex);
    auto& slot = impl_->left_mul[i];
    if (!slot) slot = build(i);
    return *slot;
  }

 private:
  struct Impl {
    Impl(std::size_t k_, std::size_t n_)
        : k(k_), n(n_), basis(multisets_up_to(k_, n_)) {
      for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
      left_mul.resize(basis.size());
    }
    std::size_t k, n;
    std::vector<Multiset> basis;
    std::map<Multiset, std::size_t> index;
    std::mutex mutex;
    std::vector<std::optional<IntMatrix>> left_mul;
  };
  std::shared_ptr<Impl> impl_;
};

inline std::size_t dimension(AugAlgebra const& alg) { return alg.dimension(); }

/// Element of Q (x) B[Z^k]_n in the deviation basis.
using AugElement = BasisCombination<AugAlgebra>;

/// Coordinates of [x] in the deviation basis:
/// [x] = sum_{|X|<=n} binom(x, X) [nabla_X e].
inline std::vector<Int> class_vector(AugAlgebra const& alg,
                                     std::span<Int const> x) {
  std::size_t k = alg.module_rank(), n = alg.degree();
  if (x.size() != k) throw shape_error("class_of: element length");
  // table[i][j] = C(x_i, j)
  std::vector<std::vector<Int>> table(k);
  for (std::size_t i = 0; i < k; ++i) {
    table[i].resize(n + 1);
    table[i][0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      table[i][j] = table[i][j - 1] * (x[i] - static_cast<unsigned long>(j - 1));
      mpz_divexact_ui(table[i][j].get_mpz_t(), table[i][j].get_mpz_t(),
                      static_cast<unsigned long>(j));
    }
  }
  std::vector<Int> out(alg.dimension());
  auto const& basis = alg.basis();
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Int c = 1;
    for (auto const& e : basis[b].entries()) {
      c *= table[e.index][e.multiplicity];
      if (c == 0) break;
    }
    out[b] = std::move(c);
  }
  return out;
}

inline AugElement class_of(AugAlgebra const& alg, std::span<Int const> x) {
  auto v = class_vector(alg, x);
  return AugElement::from_vector(alg, std::span<Int const>(v));
}

inline AugElement class_of(AugAlgebra const& alg, Element const& x) {
  return class_of(alg, std::span<Int const>(x.coords()));
}

/// Finitely supported formal combination of point classes [x].
using PointCombination = std::map<std::vector<Int>, Rat>;

inline void add_point(PointCombination& pc, std::vector<Int> p, Rat const& c) {
  if (c == 0) return;
  auto [it, fresh] = pc.try_emplace(std::move(p), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) pc.erase(it);
  }
}

/// [nabla_X e] = sum_{I} (-1)^{|X|-|I|} [sum_{i in I} e_{x_i}] over the
/// positions of the sorted word of X.
inline PointCombination basis_points(std::size_t k, Multiset const& x) {
  auto word = x.word();
  std::size_t m = word.size();
  PointCombination pc;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<Int> p(k, 0);
    std::size_t size = 0;
    for (std::size_t b = 0; b < m; ++b)
      if (mask >> b & 1) {
        p[word[b]] += 1;
        ++size;
      }
    add_point(pc, std::move(p), ((m - size) % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return pc;
}

inline PointCombination to_points(AugElement const& u) {
  std::size_t k = u.space().module_rank();
  PointCombination pc;
  for (auto const& [x, c] : u.coeffs())
    for (auto const& [p, s] : basis_points(k, x)) add_point(pc, p, c * s);
  return pc;
}

inline AugElement from_points(AugAlgebra const& alg, PointCombination const& pc) {
  std::vector<Rat> acc(alg.dimension(), 0);
  for (auto const& [p, c] : pc) {
    auto v = class_vector(alg, p);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc[i] += c * v[i];
  }
  return AugElement::from_vector(alg, std::span<Rat const>(acc));
}

/// sum_{I subset [m]} (-1)^{m-|I|} class_of(sum_{i in I} x_i). Vanishes for
/// m > n because class_of is polynomial of degree <= n.
inline AugElement class_of_deviation(AugAlgebra const& alg,
                                     std::span<Element const> xs) {
  Element zero(FreeModule{alg.module_rank()});
  for (auto const& x : xs)
    if (x.module() != zero.module()) throw shape_error("class_of_deviation");
  auto f = [&](Element const& p) { return class_of(alg, p); };
  return deviation_of(f, xs, zero);
}

inline AugElement class_of_deviation(AugAlgebra const& alg,
                                     std::vector<Element> const& xs) {
  return class_of_deviation(alg, std::span<Element const>(xs));
}

/// Sum multiplication [x][y] = [x+y].
inline AugElement sum_mul(AugElement const& u, AugElement const& v) {
  if (!(u.space() == v.space())) throw shape_error("sum_mul: algebras");
  auto pu = to_points(u), pv = to_points(v);
  PointCombination out;
  for (auto const& [p, a] : pu)
    for (auto const& [q, b] : pv) {
      std::vector<Int> s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      add_point(out, std::move(s), a * b);
    }
  return from_points(u.space(), out);
}

namespace detail {

// Row-major product of flattened (rows x mid) and (mid x cols) matrices.
inline std::vector<Int> flat_product(std::vector<Int> const& a,
                                     std::vector<Int> const& b,
                                     std::size_t rows, std::size_t mid,
                                     std::size_t cols) {
  std::vector<Int> c(rows * cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < mid; ++l) {
      Int const& x = a[i * mid + l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (b[l * cols + j] != 0) c[i * cols + j] += x * b[l * cols + j];
    }
  return c;
}

}  // namespace detail

/// [alpha] * [tau] -> [alpha tau] for alpha in B[Hom(Z^mid, Z^rows)]_n and
/// tau in B[Hom(Z^cols, Z^mid)]_n, landing in `target` = B[Z^(rows*cols)]_n.
inline AugElement compose_classes(AugElement const& left,
                                  AugElement const& right, std::size_t rows,
                                  std::size_t mid, std::size_t cols,
                                  AugAlgebra const& target) {
  if (left.space().module_rank() != rows * mid ||
      right.space().module_rank() != mid * cols ||
      target.module_rank() != rows * cols)
    throw shape_error("compose_classes: shapes");
  if (left.space().degree() != right.space().degree() ||
      target.degree() != left.space().degree())
    throw shape_error("compose_classes: degrees");
  auto pl = to_points(left), pr = to_points(right);
  PointCombination out;
  for (auto const& [p, a] : pl)
    for (auto const& [q, b] : pr)
      add_point(out, detail::flat_product(p, q, rows, mid, cols), a * b);
  return from_points(target, out);
}

/// Product multiplication [s] * [t] = [st] on B[End Z^m]_n.
inline AugElement product_mul(AugElement const& u, AugElement const& v) {
  auto const& alg = u.space();
  if (!(alg == v.space())) throw shape_error("product_mul: algebras");
  auto side = alg.endomorphism_side();
  if (!side) throw shape_error("product_mul: rank is not a perfect square");
  std::size_t m = *side;
  auto build = [&](std::size_t i) {
    auto bi = AugElement::basis(alg, alg.basis()[i]);
    IntMatrix lm(alg.dimension(), alg.dimension());
    for (std::size_t j = 0; j < alg.dimension(); ++j) {
      auto bj = AugElement::basis(alg, alg.basis()[j]);
      auto prod = compose_classes(bi, bj, m, m, m, alg).to_int_vector();
      lm.set_column(j, std::span<Int const>(prod));
    }
    return lm;
  };
  auto vv = v.to_vector();
  std::vector<Rat> acc(alg.dimension(), 0);
  for (auto const& [x, c] : u.coeffs()) {
    auto const& lm = alg.left_product_matrix(alg.index_of(x), build);
    for (std::size_t r = 0; r < lm.rows(); ++r)
      for (std::size_t j = 0; j < lm.cols(); ++j)
        if (lm(r, j) != 0 && vv[j] != 0) acc[r] += c * lm(r, j) * vv[j];
  }
  return AugElement::from_vector(alg, std::span<Rat const>(acc));
}

/// Class of the identity matrix in B[End Z^m]_n.
inline AugElement identity_class(AugAlgebra const& alg) {
  auto side = alg.endomorphism_side();
  if (!side) throw shape_error("identity_class: rank is not a perfect square");
  return class_of(alg, flatten(IntMatrix::identity(*side)));
}

/// Matrix of [x] -> [chi(x)] from B[Z^k]_n to B[Z^l]_n on deviation bases.
inline IntMatrix pushforward(Hom const& chi, AugAlgebra const& source,
                             AugAlgebra const& target) {
  if (chi.source().rank != source.module_rank() ||
      chi.target().rank != target.module_rank())
    throw shape_error("pushforward: shape mismatch");
  if (source.degree() != target.degree())
    throw shape_error("pushforward: degrees differ");
  IntMatrix out(target.dimension(), source.dimension());
  for (std::size_t c = 0; c < source.dimension(); ++c) {
    std::vector<Element> args;
    for (auto i : source.basis()[c].word())
      args.push_back(apply(chi, Element::basis(chi.source(), i)));
    auto col = class_of_deviation(target, args).to_int_vector();
    out.set_column(c, std::span<Int const>(col));
  }
  return out;
}

/// AugElement as an element of Z^dim (integral) or Q^dim.
inline std::vector<Rat> as_vector(AugElement const& u) { return u.to_vector(); }

}  // namespace numfun
