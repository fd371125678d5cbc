#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "numfun/augmentation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/functor.hpp"
#include "numfun/gamma_epsilon.hpp"
#include "numfun/lattice.hpp"
#include "numfun/matrix.hpp"

namespace numfun {

/// A finitely presented abelian group Z^gens / (column span of relations)
/// with one action matrix per basis element of an algebra.
struct PresentedModule {
  IntMatrix relations;  // gens x #relations
  std::map<Multiset, IntMatrix> action;

  std::size_t generators() const { return relations.rows(); }

  CokernelInvariants invariants() const {
    return cokernel_invariants(relations);
  }

  /// u acts as zero on the quotient.
  bool annihilates(IntMatrix const& u) const {
    Lattice rel = Lattice::column_span(relations);
    for (std::size_t j = 0; j < u.cols(); ++j) {
      auto col = u.column(j);
      if (!rel.contains(std::span<Int const>(col))) return false;
    }
    return true;
  }

  bool congruent(IntMatrix const& a, IntMatrix const& b) const {
    return annihilates(a - b);
  }

  /// Action of an integral combination of basis elements.
  template <class Space>
  IntMatrix act(BasisCombination<Space> const& u) const {
    IntMatrix out(generators(), generators());
    for (auto const& [x, c] : u.coeffs()) {
      if (!is_integral(c)) throw std::domain_error("act: non-integral element");
      auto it = action.find(x);
      if (it == action.end())
        throw std::out_of_range("act: no action for " + x.key());
      out += Int(c.get_num()) * it->second;
    }
    return out;
  }
};

/// F(Z^n) with the action [tau] x = F(tau) x of B[End Z^n]_n.
struct MoritaModule : PresentedModule {
  std::size_t n = 0;
  AugAlgebra algebra() const { return AugAlgebra(n * n, n); }
};

/// F(Z^n) with the action tau^[n] x = F(tau) x of Gamma^n(End Z^n).
struct GammaModuleStruct : PresentedModule {
  std::size_t n = 0;
  GammaModule space() const { return GammaModule(n * n, n); }
};

struct AxiomReport {
  bool descends = true;
  bool unital = true;
  bool multiplicative = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<Multiset, Multiset>> witness;
  bool passed() const { return descends && unital && multiplicative; }
};

namespace detail {

// All index pairs when there are few, otherwise a seeded sample.
inline std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(
    std::size_t dim, std::size_t limit, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim * dim <= limit) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) out.emplace_back(i, j);
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < limit; ++t)
    out.emplace_back(rng() % dim, rng() % dim);
  return out;
}

template <class Space, class Mul, class Unit>
AxiomReport check_axioms(PresentedModule const& m, Space const& space,
                         Mul const& mul, Unit const& unit, std::size_t limit,
                         std::uint64_t seed) {
  using E = BasisCombination<Space>;
  AxiomReport rep;
  Lattice rel = Lattice::column_span(m.relations);
  for (auto const& [x, a] : m.action) {
    IntMatrix moved = a * m.relations;
    for (std::size_t j = 0; j < moved.cols() && rep.descends; ++j) {
      auto col = moved.column(j);
      if (!rel.contains(std::span<Int const>(col))) rep.descends = false;
    }
  }
  rep.unital = m.congruent(m.act(unit),
                           IntMatrix::identity(m.generators()));
  for (auto [i, j] : sample_pairs(space.dimension(), limit, seed)) {
    auto const& x = space.basis()[i];
    auto const& y = space.basis()[j];
    ++rep.pairs_checked;
    E prod = mul(E::basis(space, x), E::basis(space, y));
    if (!m.congruent(m.act(prod), m.action.at(x) * m.action.at(y))) {
      rep.multiplicative = false;
      rep.witness = std::make_pair(x, y);
      break;
    }
  }
  return rep;
}

}  // namespace detail

/// Module axioms over the product multiplication: the action descends to
/// the quotient, [1] acts as 1, and act(u * v) = act(u) act(v).
inline AxiomReport check_module_axioms(MoritaModule const& m,
                                       std::size_t limit = 400,
                                       std::uint64_t seed = 0) {
  auto alg = m.algebra();
  std::size_t n = m.n;
  // A sampled pair needs one product, not a memoized multiplication table.
  return detail::check_axioms(
      m, alg,
      [&](AugElement const& u, AugElement const& v) {
        return compose_classes(u, v, n, n, n, alg);
      },
      identity_class(alg), limit, seed);
}

inline AxiomReport check_module_axioms(GammaModuleStruct const& m,
                                       std::size_t limit = 400,
                                       std::uint64_t seed = 0) {
  auto gam = m.space();
  return detail::check_axioms(
      m, gam,
      [](GammaElement const& u, GammaElement const& v) {
        return schur_product(u, v);
      },
      gamma_identity(gam), limit, seed);
}

struct certification_error : std::runtime_error {
  DeviationReport report;
  certification_error(std::string const& what, DeviationReport r)
      : std::runtime_error(what), report(std::move(r)) {}
};

/// F(Z^n) as a B[End Z^n]_n-module. The basis class [nabla_X e] acts by the
/// deviation of tau -> F(tau) at the matrix units indexed by X. Requires a
/// degree-n certificate first.
inline MoritaModule extract_morita_module(FunctorSpec const& spec,
                                          std::size_t n,
                                          CertificateOptions const& opt = {}) {
  auto cert = degree_certificate(spec, n, opt);
  if (!cert.passed)
    throw certification_error(
        spec.name() + " is not numerical of degree " + std::to_string(n),
        cert);
  MoritaModule m;
  m.n = n;
  std::size_t d = object_dim(spec, n);
  m.relations = IntMatrix(d, 0);
  AugAlgebra alg = m.algebra();
  for (auto const& x : alg.basis()) {
    std::vector<IntMatrix> units;
    for (auto i : x.word()) units.push_back(matrix_unit(n, n, i));
    m.action.emplace(x, arrow_deviation(spec, units, n, n));
  }
  return m;
}

namespace detail {

/// Columns l -> [alpha_l][tau_j] for alpha_l running over the basis of
/// B[Hom(Z^n, Z^q)]_n, one matrix per basis element tau_j of B[End Z^n]_n.
inline std::vector<IntMatrix> right_action_matrices(AugAlgebra const& p,
                                                    AugAlgebra const& r,
                                                    std::size_t q,
                                                    std::size_t n) {
  std::vector<IntMatrix> out;
  for (auto const& t : r.basis()) {
    auto bt = AugElement::basis(r, t);
    IntMatrix mat(p.dimension(), p.dimension());
    for (std::size_t l = 0; l < p.dimension(); ++l) {
      auto col =
          compose_classes(AugElement::basis(p, p.basis()[l]), bt, q, n, n, p)
              .to_int_vector();
      mat.set_column(l, std::span<Int const>(col));
    }
    out.push_back(std::move(mat));
  }
  return out;
}

// Relations of P (x)_R M on generators p_l (x) m_g (index l * G + g):
// (p b) (x) m - p (x) (b m) for each right-action matrix, and p (x) (M's
// relations).
template <class Space>
IntMatrix balanced_tensor_relations(std::vector<IntMatrix> const& right,
                                    Space const& ring,
                                    PresentedModule const& m,
                                    std::size_t pdim) {
  std::size_t g = m.generators();
  std::vector<std::vector<Int>> cols;
  for (std::size_t j = 0; j < ring.dimension(); ++j) {
    IntMatrix const& rb = right[j];
    IntMatrix const& act = m.action.at(ring.basis()[j]);
    for (std::size_t l = 0; l < pdim; ++l)
      for (std::size_t h = 0; h < g; ++h) {
        std::vector<Int> v(pdim * g, 0);
        for (std::size_t l2 = 0; l2 < pdim; ++l2)
          if (rb(l2, l) != 0) v[l2 * g + h] += rb(l2, l);
        for (std::size_t h2 = 0; h2 < g; ++h2)
          if (act(h2, h) != 0) v[l * g + h2] -= act(h2, h);
        cols.push_back(std::move(v));
      }
  }
  for (std::size_t l = 0; l < pdim; ++l)
    for (std::size_t c = 0; c < m.relations.cols(); ++c) {
      std::vector<Int> v(pdim * g, 0);
      for (std::size_t h = 0; h < g; ++h) v[l * g + h] = m.relations(h, c);
      cols.push_back(std::move(v));
    }
  return IntMatrix::from_columns(cols, pdim * g);
}

}  // namespace detail

/// The relation matrix of B[Hom(Z^n, Z^q)]_n (x)_R M with R = B[End Z^n]_n.
inline IntMatrix reconstruction_relations(MoritaModule const& m,
                                          std::size_t q) {
  std::size_t n = m.n;
  AugAlgebra r = m.algebra();
  AugAlgebra p(q * n, n);
  auto right = detail::right_action_matrices(p, r, q, n);
  return detail::balanced_tensor_relations(right, r, m, p.dimension());
}

/// Abelian group invariants of the reconstructed value F(Z^q).
inline CokernelInvariants reconstruct(MoritaModule const& m, std::size_t q) {
  return cokernel_invariants(reconstruction_relations(m, q));
}

/// Gamma^n(End Z^n)-action on F(Z^n) for a functor homogeneous of degree n,
/// read off the tensor embedding without going through gamma or epsilon:
/// e^[A] acts on (Z^n)^{(x)n} as its orbit sum Phi(A), and on S^n, Lambda^n,
/// Gamma^n through the quotient or subspace of the tensor power.
inline GammaModuleStruct direct_gamma_structure(FunctorSpec const& spec,
                                                std::size_t n) {
  using K = FunctorSpec::Kind;
  if (!spec.is_homogeneous_of(n))
    throw std::invalid_argument(spec.name() + " is not homogeneous of degree " +
                                std::to_string(n));
  GammaModuleStruct g;
  g.n = n;
  g.relations = IntMatrix(object_dim(spec, n), 0);
  GammaModule gam = g.space();
  std::size_t t = detail::int_power(n, n);

  // incl : F(Z^n) -> T^n and pi : T^n -> F(Z^n) for one summand.
  auto maps = [&](FunctorSpec const& s) -> std::pair<RatMatrix, RatMatrix> {
    std::size_t d = object_dim(s, n);
    RatMatrix incl(t, d), proj(d, t);
    switch (s.kind) {
      case K::Tensor:
        incl = RatMatrix::identity(t);
        proj = RatMatrix::identity(t);
        break;
      case K::Sym: {
        GammaModule mono(n, n);  // sorted monomials, same index set
        for (std::size_t c = 0; c < d; ++c) {
          auto w = mono.basis()[c].word();
          incl(detail::word_index(w, n), c) = 1;
        }
        std::vector<std::size_t> w(n);
        for (std::size_t idx = 0; idx < t; ++idx) {
          std::size_t rem = idx;
          for (std::size_t j = n; j-- > 0;) {
            w[j] = rem % n;
            rem /= n;
          }
          proj(mono.index_of(Multiset::from_word(w)), idx) = 1;
        }
        break;
      }
      case K::Ext: {
        auto tuples = detail::increasing_tuples(n, n);
        for (std::size_t c = 0; c < d; ++c) {
          incl(detail::word_index(tuples[c], n), c) = 1;
          // All rearrangements map back with the sign of the permutation.
          auto w = tuples[c];
          long sign = 1;
          do {
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < w.size(); ++i)
              for (std::size_t j = i + 1; j < w.size(); ++j)
                if (w[i] > w[j]) ++inversions;
            sign = inversions % 2 ? -1 : 1;
            proj(c, detail::word_index(w, n)) = sign;
          } while (std::next_permutation(w.begin(), w.end()));
        }
        break;
      }
      case K::Div: {
        GammaModule div(n, n);
        for (std::size_t c = 0; c < d; ++c) {
          auto e = embed_symmetric(GammaElement::basis(div, div.basis()[c]));
          incl.set_column(c, std::span<Rat const>(e));
          auto w = div.basis()[c].word();
          proj(c, detail::word_index(w, n)) = 1;
        }
        break;
      }
      default: break;
    }
    return {incl, proj};
  };

  std::vector<FunctorSpec> summands =
      spec.kind == K::Sum ? spec.parts : std::vector<FunctorSpec>{spec};
  std::vector<std::pair<RatMatrix, RatMatrix>> parts;
  for (auto const& s : summands) parts.push_back(maps(s));

  for (auto const& a : gam.basis()) {
    std::vector<IntMatrix> blocks;
    for (std::size_t i = 0; i < summands.size(); ++i) {
      if (summands[i].kind == K::Const) {
        // Only reachable for n = 0, where Gamma^0 = Z acts as the identity.
        blocks.push_back(IntMatrix::identity(summands[i].param));
        continue;
      }
      RatMatrix phi = symmetric_endomorphism(GammaElement::basis(gam, a));
      blocks.push_back(to_integer(parts[i].second * phi * parts[i].first));
    }
    g.action.emplace(a, detail::block_diagonal(blocks));
  }
  return g;
}

/// [nabla_X e] acts by gamma_n([nabla_X e]) expanded in g's action.
inline MoritaModule restrict_scalars(GammaModuleStruct const& g) {
  MoritaModule m;
  m.n = g.n;
  m.relations = g.relations;
  AugAlgebra alg = m.algebra();
  GammaModule gam = g.space();
  IntMatrix gm = gamma_matrix(alg.module_rank(), g.n);
  for (std::size_t c = 0; c < alg.dimension(); ++c) {
    auto col = gm.column(c);
    m.action.emplace(alg.basis()[c],
                     g.act(GammaElement::from_vector(
                         gam, std::span<Int const>(col))));
  }
  return m;
}

namespace detail {

// Replaces Z^gens / rel by the Smith-simplified presentation; each action
// matrix is conjugated into the new coordinates and generators with unit
// invariant factor are dropped.
template <class M>
void simplify_presentation(M& m) {
  std::size_t g = m.relations.rows();
  auto snf = smith_normal_form(m.relations);
  // rel = U S V, so U^-1 rel = S V and the new coordinates are U^-1 x.
  std::vector<std::size_t> keep;
  std::vector<Int> diag(g, 0);
  for (std::size_t i = 0; i < std::min(g, m.relations.cols()); ++i)
    diag[i] = snf.S(i, i);
  for (std::size_t i = 0; i < g; ++i)
    if (diag[i] != 1) keep.push_back(i);
  IntMatrix rel(keep.size(), 0);
  std::vector<std::vector<Int>> rel_cols;
  for (std::size_t a = 0; a < keep.size(); ++a)
    if (diag[keep[a]] > 1) {
      std::vector<Int> v(keep.size(), 0);
      v[a] = diag[keep[a]];
      rel_cols.push_back(std::move(v));
    }
  m.relations = rel_cols.empty() ? rel
                                 : IntMatrix::from_columns(rel_cols, keep.size());
  for (auto& [x, a] : m.action) {
    IntMatrix full = snf.U_inv * a * snf.U;
    IntMatrix small(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        small(i, j) = full(keep[i], keep[j]);
    a = std::move(small);
  }
}

}  // namespace detail

/// Gamma^n(End Z^n) (x)_R M along gamma_n, with the Gamma-action by left
/// Schur multiplication; the presentation is simplified by Smith form.
inline GammaModuleStruct extend_scalars(MoritaModule const& m) {
  std::size_t n = m.n;
  AugAlgebra r = m.algebra();
  GammaModule gam(n * n, n);
  IntMatrix gm = gamma_matrix(n * n, n);
  std::size_t gd = gam.dimension(), g = m.generators();

  // Right action u -> u * gamma(b) of each basis element b of R on Gamma.
  std::vector<IntMatrix> right;
  for (std::size_t j = 0; j < r.dimension(); ++j) {
    auto col = gm.column(j);
    auto gb = GammaElement::from_vector(gam, std::span<Int const>(col));
    IntMatrix mat(gd, gd);
    for (std::size_t l = 0; l < gd; ++l) {
      auto v = schur_product(GammaElement::basis(gam, gam.basis()[l]), gb)
                   .to_int_vector();
      mat.set_column(l, std::span<Int const>(v));
    }
    right.push_back(std::move(mat));
  }

  GammaModuleStruct out;
  out.n = n;
  out.relations = detail::balanced_tensor_relations(right, r, m, gd);
  for (auto const& a : gam.basis()) {
    auto ea = GammaElement::basis(gam, a);
    IntMatrix act(gd * g, gd * g);
    for (std::size_t l = 0; l < gd; ++l) {
      auto v = schur_product(ea, GammaElement::basis(gam, gam.basis()[l]))
                   .to_int_vector();
      for (std::size_t l2 = 0; l2 < gd; ++l2)
        if (v[l2] != 0)
          for (std::size_t h = 0; h < g; ++h) act(l2 * g + h, l * g + h) = v[l2];
    }
    out.action.emplace(a, std::move(act));
  }
  detail::simplify_presentation(out);
  return out;
}

/// Every generator of Ker gamma_n acts as zero.
inline bool quasi_homogeneity_test(MoritaModule const& m) {
  auto kc = kernel_of_gamma(m.n * m.n, m.n);
  AugAlgebra alg = m.algebra();
  for (auto const& v : kc.kernel.basis_rows()) {
    auto u = AugElement::from_vector(alg, std::span<Int const>(v));
    if (!m.annihilates(m.act(u))) return false;
  }
  return true;
}

/// Two presented modules agree up to a change of basis, as far as the
/// invariant factors and the traces of each action matrix and of each
/// product of two action matrices can tell. Traces are compared only when
/// the group is torsion-free, where the presentations are free.
struct ModuleComparison {
  bool invariants_match = false;
  bool traces_match = false;
  bool traces_compared = false;
  bool passed() const { return invariants_match && traces_match; }
};

inline Int trace(IntMatrix const& a) {
  Int t = 0;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

inline ModuleComparison compare_modules(PresentedModule const& a,
                                        PresentedModule const& b) {
  ModuleComparison c;
  auto ia = a.invariants(), ib = b.invariants();
  c.invariants_match = ia == ib;
  if (!c.invariants_match) return c;
  bool free_a = a.relations.is_zero(), free_b = b.relations.is_zero();
  if (!free_a || !free_b || !ia.torsion.empty()) {
    c.traces_match = true;
    return c;
  }
  c.traces_compared = true;
  c.traces_match = true;
  for (auto const& [x, ma] : a.action) {
    auto it = b.action.find(x);
    if (it == b.action.end() || trace(ma) != trace(it->second)) {
      c.traces_match = false;
      return c;
    }
  }
  for (auto const& [x, ma] : a.action)
    for (auto const& [y, mb] : a.action)
      if (trace(ma * mb) != trace(b.action.at(x) * b.action.at(y))) {
        c.traces_match = false;
        return c;
      }
  return c;
}

/// The zero module over B[End Z^n]_n.
inline MoritaModule zero_module(std::size_t n) {
  MoritaModule m;
  m.n = n;
  m.relations = IntMatrix(0, 0);
  AugAlgebra alg = m.algebra();
  for (auto const& x : alg.basis()) m.action.emplace(x, IntMatrix(0, 0));
  return m;
}

}  // namespace numfun
