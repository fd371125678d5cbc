#include <gtest/gtest.h>

#include <random>

#include "numfun/gamma_epsilon.hpp"

using namespace numfun;

namespace {

std::size_t col(AugAlgebra const& alg, std::initializer_list<std::size_t> word) {
  return alg.index_of(Multiset::from_word(word));
}

std::size_t row(GammaModule const& g, std::initializer_list<std::size_t> word) {
  return g.index_of(Multiset::from_word(word));
}

}  // namespace

TEST(GammaMatrix, Examples) {
  AugAlgebra alg(1, 2);
  GammaModule g(1, 2);
  auto m = gamma_matrix(1, 2);
  ASSERT_EQ(m.rows(), 1u);
  ASSERT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(0, col(alg, {})), 0);
  EXPECT_EQ(m(0, col(alg, {0})), 1);
  EXPECT_EQ(m(0, col(alg, {0, 0})), 2);
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      AugAlgebra a(k, n);
      auto gm = gamma_matrix(k, n);
      for (std::size_t r = 0; r < gm.rows(); ++r) EXPECT_EQ(gm(r, col(a, {})), 0);
    }
  (void)g;
}

TEST(GammaMatrix, TopClassesGiveProducts) {
  // gamma [e_{i1} | ... | e_{in}] = e_{i1} ... e_{in} in Gamma^n.
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      AugAlgebra alg(k, n);
      GammaModule g(k, n);
      FreeModule z{k};
      auto gm = gamma_matrix(k, n);
      for (auto const& a : g.basis()) {
        std::vector<Element> xs;
        for (auto i : a.word()) xs.push_back(Element::basis(z, i));
        auto expect = product_of_elements(g, xs).to_int_vector();
        EXPECT_EQ(gm.column(alg.index_of(a)), expect);
      }
    }
}

TEST(Epsilon, Examples) {
  auto eps = epsilon_matrix(2, 2);
  AugAlgebra alg(2, 2);
  GammaModule g(2, 2);
  EXPECT_EQ(eps(col(alg, {0, 1}), row(g, {0, 1})), Rat(1));
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    if (i != col(alg, {0, 1})) {
      EXPECT_EQ(eps(i, row(g, {0, 1})), Rat(0));
    }
  auto e1 = epsilon_matrix(1, 2);
  EXPECT_EQ(e1(col(AugAlgebra(1, 2), {0, 0}), 0), Rat(1, 2));
  for (std::size_t n = 1; n <= 3; ++n) {
    AugAlgebra a(3, n);
    GammaModule gg(3, n);
    auto e = epsilon_matrix(3, n);
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<std::size_t> w(n, i);
      auto x = Multiset::from_word(std::span<std::size_t const>(w));
      EXPECT_EQ(e(a.index_of(x), gg.index_of(x)), Rat(Int(1), factorial(n)));
    }
  }
}

TEST(Section, IdentityOnTheGrid) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto p = gamma_epsilon_pair(k, n);
      EXPECT_TRUE(verify_section(p)) << k << " " << n;
      RatMatrix prod = to_rational(p.gamma) * p.epsilon();
      EXPECT_EQ(prod, RatMatrix::identity(prod.rows()));
      for (auto const& d : p.epsilon_denominators) EXPECT_EQ(factorial(n) % d, 0);
    }
  EXPECT_TRUE(verify_section(gamma_epsilon_pair(9, 3)));
}

TEST(Kernel, Examples) {
  AugAlgebra alg(1, 2);
  auto kc = kernel_of_gamma(1, 2);
  std::vector<Int> zero(3, 0), dev(3, 0);
  zero[col(alg, {})] = 1;
  dev[col(alg, {0, 0})] = 1;
  dev[col(alg, {0})] = -2;
  EXPECT_EQ(kc.kernel, Lattice::from_generators({zero, dev}, 3));
  EXPECT_TRUE(kc.match);
  auto k1 = kernel_of_gamma(1, 1);
  EXPECT_EQ(k1.kernel, Lattice::from_generators({{1, 0}}, 2));
}

TEST(Kernel, MatchesGeneratedSpan) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto kc = kernel_of_gamma(k, n);
      EXPECT_TRUE(kc.match) << k << " " << n;
      AugAlgebra alg(k, n);
      EXPECT_EQ(kc.kernel.rank(), alg.dimension() - GammaModule(k, n).dimension());
    }
}

TEST(Kernel, ContainsScalingDifferencesForAnyVector) {
  // [r z] - r^n [z] lies in the kernel for z outside the 0/1 sample too.
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 3; ++n) {
    AugAlgebra alg(2, n);
    auto kc = kernel_of_gamma(2, n);
    for (int t = 0; t < 10; ++t) {
      std::vector<Int> z{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
      Int r = static_cast<long>(rng() % 9) - 4;
      std::vector<Int> rz{r * z[0], r * z[1]};
      auto v = class_of(alg, std::span<Int const>(rz)) - power(r, n) * class_of(alg, std::span<Int const>(z));
      auto iv = v.to_int_vector();
      EXPECT_TRUE(kc.kernel.contains(std::span<Int const>(iv)));
    }
  }
}

TEST(Cokernel, Examples) {
  auto c = cokernel_of_pi_gamma(1, 2);
  EXPECT_TRUE(c.injective);
  EXPECT_EQ(c.stacked.torsion, std::vector<Int>{2});
  EXPECT_EQ(c.stacked.free_rank, 0u);
  EXPECT_EQ(c.products, c.stacked);
  EXPECT_EQ(c.index, Int(2));
  auto c22 = cokernel_of_pi_gamma(2, 2);
  EXPECT_TRUE(c22.match);
  EXPECT_EQ(c22.stacked.torsion, (std::vector<Int>{2, 2}));
}

TEST(Cokernel, InjectiveOfFiniteIndex) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto c = cokernel_of_pi_gamma(k, n);
      EXPECT_TRUE(c.injective);
      EXPECT_TRUE(c.match);
      EXPECT_TRUE(c.index.has_value());
    }
  EXPECT_EQ(cokernel_of_pi_gamma(1, 3).stacked.torsion, std::vector<Int>{6});
}

TEST(Truncation, DropsTopClasses) {
  auto p = truncation_matrix(2, 2);
  AugAlgebra big(2, 2), small(2, 1);
  ASSERT_EQ(p.rows(), small.dimension());
  ASSERT_EQ(p.cols(), big.dimension());
  for (std::size_t c = 0; c < big.dimension(); ++c) {
    auto const& x = big.basis()[c];
    for (std::size_t r = 0; r < small.dimension(); ++r)
      EXPECT_EQ(p(r, c), small.basis()[r] == x ? 1 : 0);
  }
  EXPECT_THROW(truncation_matrix(2, 0), std::invalid_argument);
}

TEST(RingHom, TwentyPairs) {
  for (std::size_t n = 2; n <= 3; ++n) {
    auto r = ring_hom_checks(2, n, 77, 20);
    EXPECT_EQ(r.pairs, 20u);
    EXPECT_TRUE(r.gamma_multiplicative);
    EXPECT_TRUE(r.epsilon_multiplicative);
    EXPECT_TRUE(r.deviation_product);
  }
}

TEST(ImageEpsilon, Splitting) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      auto r = image_epsilon_decomposition(k, n);
      std::size_t gd = GammaModule(k, n).dimension(), bd = AugAlgebra(k, n).dimension();
      EXPECT_TRUE(r.idempotent);
      EXPECT_TRUE(r.passed(gd));
      EXPECT_EQ(r.projector_rank, gd);
      EXPECT_EQ(r.extended_projector_rank, gd);
      EXPECT_EQ(r.extended_kernel_part_rank, bd - gd);
    }
}

TEST(Quadratic, SplitAndCubicContrast) {
  for (std::size_t k : {1, 2, 4}) {
    auto q = quadratic_split(k);
    EXPECT_TRUE(q.surjective) << k;
    EXPECT_TRUE(q.integral_section_found) << k;
    EXPECT_FALSE(q.epsilon_integral);
  }
  EXPECT_TRUE(quadratic_split(1).cubic_gamma.trivial());
  EXPECT_EQ(quadratic_split(2).cubic_gamma.torsion, std::vector<Int>{2});
  EXPECT_EQ(quadratic_split(1).cubic_products_rank1.torsion, std::vector<Int>{6});
}

TEST(IntegralSection, SectionOfGamma2) {
  auto g = gamma_matrix(2, 2);
  auto s = integral_section(g);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(g * *s, IntMatrix::identity(g.rows()));
  EXPECT_FALSE(integral_section(gamma_matrix(2, 3)).has_value());
}

TEST(Naturality, AlongRandomHoms) {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 4; ++t) {
      IntMatrix m(2, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = static_cast<long>(rng() % 5) - 2;
      EXPECT_TRUE(gamma_is_natural(Hom(m), n));
    }
}
