#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/augmentation.hpp"
#include "numfun/divided_power.hpp"
#include "numfun/lattice.hpp"
#include "numfun/matrix.hpp"
#include "numfun/modules.hpp"

namespace numfun {

/// Matrix of gamma_n : B[Z^k]_n -> Gamma^n(Z^k), [x] -> x^[n]. The column of
/// [nabla_X e] is the deviation of x -> x^[n] at the e_{x_i}.
inline IntMatrix gamma_matrix(std::size_t k, std::size_t n) {
  AugAlgebra alg(k, n);
  GammaModule gam(k, n);
  IntMatrix g(gam.dimension(), alg.dimension());
  FreeModule mod{k};
  for (std::size_t c = 0; c < alg.dimension(); ++c) {
    std::vector<Element> args;
    for (auto i : alg.basis()[c].word()) args.push_back(Element::basis(mod, i));
    auto f = [&](Element const& x) { return divided_power(gam, x); };
    auto col = deviation_of(f, std::span<Element const>(args), Element(mod))
                   .to_int_vector();
    g.set_column(c, std::span<Int const>(col));
  }
  return g;
}

/// deg A = prod_i a_i!.
inline Int multiset_degree(Multiset const& a) {
  Int d = 1;
  for (auto const& e : a.entries()) d *= factorial(e.multiplicity);
  return d;
}

/// gamma_n with its rational section. epsilon is kept as integer numerators
/// over one denominator per column, so products with gamma stay integral.
struct GammaEpsilonPair {
  std::size_t k = 0, n = 0;
  IntMatrix gamma;
  IntMatrix epsilon_numerators;
  std::vector<Int> epsilon_denominators;

  RatMatrix epsilon() const {
    RatMatrix e = to_rational(epsilon_numerators);
    for (std::size_t j = 0; j < e.cols(); ++j)
      for (std::size_t i = 0; i < e.rows(); ++i)
        if (e(i, j) != 0) e(i, j) /= epsilon_denominators[j];
    return e;
  }
};

/// Builds gamma and the candidate section e^[A] -> (1/deg A) [nabla_A e]
/// without checking it.
inline GammaEpsilonPair gamma_epsilon_pair(std::size_t k, std::size_t n) {
  GammaEpsilonPair p;
  p.k = k;
  p.n = n;
  p.gamma = gamma_matrix(k, n);
  AugAlgebra alg(k, n);
  GammaModule gam(k, n);
  FreeModule mod{k};
  p.epsilon_numerators = IntMatrix(alg.dimension(), gam.dimension());
  for (std::size_t c = 0; c < gam.dimension(); ++c) {
    auto const& a = gam.basis()[c];
    std::vector<Element> args;
    for (auto i : a.word()) args.push_back(Element::basis(mod, i));
    auto col = class_of_deviation(alg, args).to_int_vector();
    p.epsilon_numerators.set_column(c, std::span<Int const>(col));
    p.epsilon_denominators.push_back(multiset_degree(a));
  }
  return p;
}

/// gamma * epsilon == identity, exactly.
inline bool verify_section(GammaEpsilonPair const& p) {
  IntMatrix prod = p.gamma * p.epsilon_numerators;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      Int expected = (i == j) ? p.epsilon_denominators[j] : Int(0);
      if (prod(i, j) != expected) return false;
    }
  return true;
}

struct section_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// The section as a rational matrix; throws if gamma * epsilon != 1.
inline RatMatrix epsilon_matrix(std::size_t k, std::size_t n) {
  auto p = gamma_epsilon_pair(k, n);
  if (!verify_section(p))
    throw section_error("gamma * epsilon is not the identity for k=" +
                        std::to_string(k) + " n=" + std::to_string(n));
  return p.epsilon();
}

/// All 0/1 vectors of length k, in binary counting order.
inline std::vector<std::vector<Int>> zero_one_vectors(std::size_t k) {
  std::vector<std::vector<Int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Int> v(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

struct KernelComparison {
  Lattice kernel;
  Lattice generated;  // saturated span of [rz] - r^n [z]
  bool match = false;
};

/// Compares Ker gamma_n with the saturation of the span of
/// [rz] - r^n [z], z a 0/1 vector, |r| <= n+1.
inline KernelComparison kernel_of_gamma(std::size_t k, std::size_t n) {
  KernelComparison out;
  out.kernel = kernel_lattice(gamma_matrix(k, n));
  AugAlgebra alg(k, n);
  std::vector<std::vector<Int>> gens;
  long bound = static_cast<long>(n) + 1;
  for (auto const& z : zero_one_vectors(k)) {
    auto base = class_vector(alg, z);
    for (long r = -bound; r <= bound; ++r) {
      std::vector<Int> rz(k);
      for (std::size_t i = 0; i < k; ++i) rz[i] = Int(r) * z[i];
      auto v = class_vector(alg, rz);
      Int rn = power(Int(r), n);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= rn * base[i];
      gens.push_back(std::move(v));
    }
  }
  out.generated =
      saturation(Lattice::from_generators(gens, alg.dimension()));
  out.match = out.generated == out.kernel;
  return out;
}

/// pi : B[Z^k]_n -> B[Z^k]_{n-1}, identity on |X| <= n-1 and zero on |X| = n.
inline IntMatrix truncation_matrix(std::size_t k, std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncation needs n >= 1");
  AugAlgebra big(k, n), small(k, n - 1);
  IntMatrix p(small.dimension(), big.dimension());
  for (std::size_t i = 0; i < small.dimension(); ++i)
    p(i, big.index_of(small.basis()[i])) = 1;
  return p;
}

/// Every product x_1 ... x_n with nonzero 0/1 factors.
inline std::vector<std::vector<Int>> product_generators(std::size_t k,
                                                        std::size_t n) {
  GammaModule gam(k, n);
  FreeModule mod{k};
  std::vector<Element> pool;
  for (auto const& v : zero_one_vectors(k))
    if (!Element(mod, v).is_zero()) pool.emplace_back(mod, v);
  std::vector<std::vector<Int>> out;
  for (auto const& choice : multisets_of_size(pool.size(), n)) {
    std::vector<Element> xs;
    for (auto i : choice.word()) xs.push_back(pool[i]);
    out.push_back(product_of_elements(gam, xs).to_int_vector());
  }
  return out;
}

struct CokernelComparison {
  CokernelInvariants stacked;    // coker (pi, gamma_n)
  CokernelInvariants products;   // Gamma^n / <x_1 ... x_n>
  bool injective = false;
  bool match = false;
  std::optional<Int> index;
};

inline CokernelComparison cokernel_of_pi_gamma(std::size_t k, std::size_t n) {
  CokernelComparison out;
  IntMatrix stacked = vstack(truncation_matrix(k, n), gamma_matrix(k, n));
  out.injective = kernel_lattice(stacked).is_zero();
  out.stacked = cokernel_invariants(stacked);
  GammaModule gam(k, n);
  out.products = quotient_invariants(
      Lattice::from_generators(product_generators(k, n), gam.dimension()));
  out.match = out.stacked == out.products;
  out.index = out.stacked.order();
  return out;
}

namespace detail {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                               std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = lo + static_cast<long>(rng() % span);
  return m;
}

}  // namespace detail

struct RingHomReport {
  std::size_t pairs = 0;
  bool gamma_multiplicative = true;
  bool epsilon_multiplicative = true;
  bool deviation_product = true;  // [nabla_n a]*[nabla_n b] = n! [nabla_n ab]
  std::optional<std::pair<IntMatrix, IntMatrix>> witness;

  bool passed() const {
    return gamma_multiplicative && epsilon_multiplicative && deviation_product;
  }
};

/// [nabla_n x] = class_of_deviation of n copies of x.
inline AugElement repeated_class(AugAlgebra const& alg, Element const& x,
                                 std::size_t times) {
  return class_of_deviation(alg, std::vector<Element>(times, x));
}

/// Column-wise image of a rational vector under a matrix.
inline std::vector<Rat> apply_rational(RatMatrix const& m,
                                       std::vector<Rat> const& v) {
  return m.apply(std::span<Rat const>(v));
}

/// Checks on random m x m integral pairs (entries in [-2, 2]) that gamma_n and
/// epsilon_n respect the product multiplications.
inline RingHomReport ring_hom_checks(std::size_t m, std::size_t n,
                                     std::uint64_t seed,
                                     std::size_t pairs = 20) {
  RingHomReport rep;
  std::size_t k = m * m;
  AugAlgebra alg(k, n);
  GammaModule gam(k, n);
  IntMatrix g = gamma_matrix(k, n);
  RatMatrix gq = to_rational(g);
  RatMatrix eps = epsilon_matrix(k, n);
  std::mt19937_64 rng(seed);
  auto gamma_of = [&](AugElement const& u) {
    auto v = apply_rational(gq, u.to_vector());
    return GammaElement::from_vector(gam, std::span<Rat const>(v));
  };
  auto epsilon_of = [&](GammaElement const& u) {
    auto v = apply_rational(eps, u.to_vector());
    return AugElement::from_vector(alg, std::span<Rat const>(v));
  };
  Int nf = factorial(n);
  for (std::size_t t = 0; t < pairs; ++t) {
    IntMatrix a = detail::random_matrix(rng, m, m, -2, 2);
    IntMatrix b = detail::random_matrix(rng, m, m, -2, 2);
    IntMatrix ab = a * b;
    Element fa = flatten(a), fb = flatten(b), fab = flatten(ab);
    ++rep.pairs;
    bool ok = true;

    auto ca = class_of(alg, fa), cb = class_of(alg, fb);
    if (gamma_of(product_mul(ca, cb)) !=
        schur_product(gamma_of(ca), gamma_of(cb))) {
      rep.gamma_multiplicative = false;
      ok = false;
    }

    auto da = divided_power(gam, fa), db = divided_power(gam, fb);
    if (epsilon_of(divided_power(gam, fab)) !=
        product_mul(epsilon_of(da), epsilon_of(db))) {
      rep.epsilon_multiplicative = false;
      ok = false;
    }

    if (product_mul(repeated_class(alg, fa, n), repeated_class(alg, fb, n)) !=
        nf * repeated_class(alg, fab, n)) {
      rep.deviation_product = false;
      ok = false;
    }
    if (!ok && !rep.witness) rep.witness = std::make_pair(a, b);
  }
  return rep;
}

/// Splitting of the image of epsilon along p = epsilon * gamma.
struct ImageEpsilonReport {
  bool idempotent = false;
  // Im epsilon read as the lattice spanned by the columns of epsilon, scaled
  // to integers column by column.
  std::size_t image_rank = 0;
  std::size_t projector_rank = 0;     // rank of p on Im epsilon
  std::size_t complement_rank = 0;    // rank of (1 - p) on Im epsilon
  std::size_t kernel_part_rank = 0;   // rank of Ker gamma meet Im epsilon
  // The same bookkeeping on E = B[Z^k]_n + epsilon(Gamma^n).
  std::size_t extended_projector_rank = 0;
  std::size_t extended_complement_rank = 0;
  std::size_t extended_kernel_part_rank = 0;

  bool passed(std::size_t gamma_dim) const {
    return idempotent && projector_rank == gamma_dim &&
           image_rank == projector_rank + complement_rank &&
           complement_rank == kernel_part_rank &&
           extended_projector_rank == gamma_dim &&
           extended_complement_rank == extended_kernel_part_rank;
  }
};

inline ImageEpsilonReport image_epsilon_decomposition(std::size_t k,
                                                      std::size_t n) {
  ImageEpsilonReport rep;
  auto pair = gamma_epsilon_pair(k, n);
  RatMatrix eps = pair.epsilon();
  RatMatrix p = eps * to_rational(pair.gamma);
  rep.idempotent = p * p == p;
  std::size_t dim = p.rows();
  RatMatrix one_minus = RatMatrix::identity(dim) - p;

  IntMatrix image_cols = pair.epsilon_numerators;
  Lattice image = Lattice::column_span(image_cols);
  rep.image_rank = image.rank();
  RatMatrix image_q = to_rational(image_cols);
  rep.projector_rank = rank(p * image_q);
  rep.complement_rank = rank(one_minus * image_q);
  Lattice ker = kernel_lattice(pair.gamma);
  rep.kernel_part_rank = lattice_intersection(ker, image).rank();

  // E scaled by n! so that it is integral: columns n! e_i and n! eps_j.
  Int nf = factorial(n);
  IntMatrix e_cols(dim, dim + eps.cols());
  for (std::size_t i = 0; i < dim; ++i) e_cols(i, i) = nf;
  for (std::size_t j = 0; j < eps.cols(); ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      Rat v = eps(i, j) * nf;
      e_cols(i, dim + j) = v.get_num();
    }
  Lattice extended = Lattice::column_span(e_cols);
  RatMatrix e_q = to_rational(e_cols);
  rep.extended_projector_rank = rank(p * e_q);
  rep.extended_complement_rank = rank(one_minus * e_q);
  rep.extended_kernel_part_rank =
      lattice_intersection(ker, extended).rank();
  return rep;
}

/// Solves gamma * s = 1 over the integers through the Smith form when
/// gamma is onto.
inline std::optional<IntMatrix> integral_section(IntMatrix const& gamma) {
  auto snf = smith_normal_form(gamma);
  std::size_t r = gamma.rows();
  for (std::size_t i = 0; i < r; ++i)
    if (i >= gamma.cols() || snf.S(i, i) != 1) return std::nullopt;
  // gamma = U [I 0] V, so s = V^-1 [I; 0] U^-1.
  IntMatrix lift(gamma.cols(), r);
  for (std::size_t i = 0; i < r; ++i) lift(i, i) = 1;
  IntMatrix s = snf.V_inv * lift * snf.U_inv;
  if (!(gamma * s == IntMatrix::identity(r))) return std::nullopt;
  return s;
}

struct QuadraticSplitReport {
  std::size_t k = 0;
  bool surjective = false;            // coker gamma_2 trivial
  bool epsilon_integral = false;      // the explicit section has Z entries
  bool integral_section_found = false;
  // Degree-3 contrast.
  CokernelInvariants cubic_gamma;          // coker gamma_3 at the same k
  CokernelInvariants cubic_products_rank1; // Gamma^3(Z) / <x y z>

  bool passed() const {
    return surjective && integral_section_found &&
           !cubic_products_rank1.trivial();
  }
};

inline QuadraticSplitReport quadratic_split(std::size_t k) {
  QuadraticSplitReport rep;
  rep.k = k;
  IntMatrix g = gamma_matrix(k, 2);
  rep.surjective = cokernel_invariants(g).trivial();
  rep.epsilon_integral = is_integral(epsilon_matrix(k, 2));
  rep.integral_section_found = integral_section(g).has_value();
  rep.cubic_gamma = cokernel_invariants(gamma_matrix(k, 3));
  rep.cubic_products_rank1 = quotient_invariants(
      Lattice::from_generators(product_generators(1, 3), 1));
  return rep;
}

/// gamma_n(l) * pushforward(chi) == Gamma^n(chi) * gamma_n(k).
inline bool gamma_is_natural(Hom const& chi, std::size_t n) {
  std::size_t k = chi.source().rank, l = chi.target().rank;
  AugAlgebra src(k, n), dst(l, n);
  return gamma_matrix(l, n) * pushforward(chi, src, dst) ==
         gamma_of_hom(chi, n) * gamma_matrix(k, n);
}

}  // namespace numfun
