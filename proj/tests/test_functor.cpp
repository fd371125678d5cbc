#include <gtest/gtest.h>

#include <random>

#include "numfun/functor.hpp"

using namespace numfun;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
  return m;
}

std::vector<FunctorSpec> all_kinds() {
  return {FunctorSpec::tensor(2), FunctorSpec::sym(2),    FunctorSpec::ext(2),
          FunctorSpec::div(2),    FunctorSpec::tensor(3), FunctorSpec::sym(3),
          FunctorSpec::ext(3),    FunctorSpec::div(3),    FunctorSpec::constant(2),
          FunctorSpec::sum({FunctorSpec::sym(2), FunctorSpec::ext(1)})};
}

}  // namespace

TEST(ObjectDim, Examples) {
  EXPECT_EQ(object_dim(FunctorSpec::tensor(2), 3), 9u);
  EXPECT_EQ(object_dim(FunctorSpec::sym(2), 3), 6u);
  EXPECT_EQ(object_dim(FunctorSpec::ext(2), 3), 3u);
  EXPECT_EQ(object_dim(FunctorSpec::div(3), 2), 4u);
  EXPECT_EQ(object_dim(FunctorSpec::ext(3), 2), 0u);
  EXPECT_EQ(object_dim(FunctorSpec::constant(4), 7), 4u);
  EXPECT_EQ(object_dim(FunctorSpec::sum({FunctorSpec::sym(2), FunctorSpec::ext(2)}), 3), 9u);
}

TEST(Spec, DegreeAndHomogeneity) {
  auto mixed = FunctorSpec::sum({FunctorSpec::sym(2), FunctorSpec::constant(1)});
  EXPECT_EQ(mixed.degree(), 2u);
  EXPECT_FALSE(mixed.is_homogeneous_of(2));
  EXPECT_TRUE(FunctorSpec::sum({FunctorSpec::sym(2), FunctorSpec::ext(2)}).is_homogeneous_of(2));
  EXPECT_EQ(mixed.name(), "(S2+Z1)");
  EXPECT_THROW(FunctorSpec::sum({}), std::invalid_argument);
}

TEST(Arrow, ExteriorSquareIsDeterminantOnRank2) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(rng, 2, 2);
    auto m = arrow_map(FunctorSpec::ext(2), Hom(a));
    ASSERT_EQ(m.rows(), 1u);
    EXPECT_EQ(m(0, 0), determinant(a));
  }
}

TEST(Arrow, SymmetricSquareOfDiagonal) {
  // Monomials e1^2, e1e2, e2^2 scale by a^2, ab, b^2.
  auto m = arrow_map(FunctorSpec::sym(2), Hom(IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(m, (IntMatrix{{4, 0, 0}, {0, 6, 0}, {0, 0, 9}}));
}

TEST(Arrow, Functoriality) {
  std::mt19937_64 rng(13);
  for (auto const& f : all_kinds())
    for (int t = 0; t < 20; ++t) {
      std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3, r = 1 + rng() % 3;
      Hom a(random_matrix(rng, q, p)), b(random_matrix(rng, r, q));
      EXPECT_EQ(arrow_map(f, compose(b, a)), arrow_map(f, b) * arrow_map(f, a)) << f.name();
      EXPECT_EQ(arrow_map(f, Hom::identity(FreeModule{p})), IntMatrix::identity(object_dim(f, p)));
    }
}

TEST(Arrow, HomogeneousScaling) {
  std::mt19937_64 rng(14);
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto const& f : {FunctorSpec::tensor(n), FunctorSpec::sym(n), FunctorSpec::ext(n),
                          FunctorSpec::div(n)}) {
      auto a = random_matrix(rng, 3, 3);
      for (long r = -3; r <= 3; ++r)
        EXPECT_EQ(arrow_map(f, Hom(Int(r) * a)), power(Int(r), n) * arrow_map(f, Hom(a)));
    }
}

TEST(Certificate, Examples) {
  auto s2 = degree_certificate(FunctorSpec::sym(2), 2);
  EXPECT_TRUE(s2.passed);
  EXPECT_GT(s2.samples_used, 0u);
  auto s2low = degree_certificate(FunctorSpec::sym(2), 1);
  EXPECT_FALSE(s2low.passed);
  ASSERT_TRUE(s2low.witness.has_value());
  EXPECT_TRUE(degree_certificate(FunctorSpec::constant(1), 0).passed);
  EXPECT_FALSE(degree_certificate(FunctorSpec::tensor(1), 0).passed);
}

TEST(Certificate, CatalogAtAndBelowDegree) {
  for (auto const& f : catalog(3)) {
    std::size_t d = f.degree();
    EXPECT_TRUE(degree_certificate(f, d).passed) << f.name();
    EXPECT_TRUE(degree_certificate(f, d + 1).passed) << f.name();
    if (d > 0) {
      // L^n(Z^p) vanishes for p < n, so failure shows up at the seeded homs.
      EXPECT_FALSE(degree_certificate(f, d - 1).passed) << f.name();
    }
  }
}

TEST(Certificate, DeterministicPerSeed) {
  CertificateOptions opt;
  opt.seed = 99;
  auto a = degree_certificate(FunctorSpec::div(2), 1, opt);
  auto b = degree_certificate(FunctorSpec::div(2), 1, opt);
  EXPECT_EQ(a.samples_used, b.samples_used);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->condition, b.witness->condition);
  EXPECT_EQ(a.witness->arguments, b.witness->arguments);
}

TEST(MultisetFormula, CatalogFunctors) {
  std::mt19937_64 rng(15);
  for (auto const& f : {FunctorSpec::sym(2), FunctorSpec::tensor(3), FunctorSpec::div(3),
                        FunctorSpec::ext(2)}) {
    auto phi = arrow_setmap(f, 2, 2);
    for (int t = 0; t < 5; ++t) {
      std::size_t k = 1 + rng() % 3;
      std::vector<Element> alphas;
      std::vector<Int> a;
      for (std::size_t i = 0; i < k; ++i) {
        alphas.push_back(flatten(random_matrix(rng, 2, 2)));
        a.push_back(static_cast<long>(rng() % 7) - 3);
      }
      EXPECT_TRUE(multiset_formula_holds(phi, alphas, a, f.degree())) << f.name();
    }
  }
}

TEST(CubicFormulae, HoldForCubicFunctors) {
  std::mt19937_64 rng(16);
  for (auto const& f : {FunctorSpec::tensor(3), FunctorSpec::sym(3), FunctorSpec::div(3),
                        FunctorSpec::sym(2)}) {
    auto phi = arrow_setmap(f, 2, 1);
    for (int t = 0; t < 4; ++t) {
      std::vector<Element> al;
      std::vector<Int> a;
      for (int i = 0; i < 3; ++i) {
        al.push_back(flatten(random_matrix(rng, 1, 2)));
        a.push_back(static_cast<long>(rng() % 7) - 3);
      }
      EXPECT_TRUE(cubic_formulae_hold(phi, al, a)) << f.name();
    }
  }
  // A quartic map breaks the one-argument identity.
  SetMap quartic(FreeModule{1}, FreeModule{1}, [](Element const& x) {
    return Element(std::vector<Int>{x[0] * x[0] * x[0] * x[0]});
  });
  std::vector<Element> ones(3, Element(std::vector<Int>{1}));
  EXPECT_FALSE(cubic_formulae_hold(quartic, ones, {2, 1, 1}));
}

TEST(Catalog, Contents) {
  auto c = catalog(2);
  EXPECT_EQ(c.size(), 9u);
  EXPECT_EQ(c.back(), FunctorSpec::constant(1));
}
