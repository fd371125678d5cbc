#include <gtest/gtest.h>

#include <random>

#include "numfun/divided_power.hpp"

using namespace numfun;

namespace {

GammaElement term(GammaModule const& g, std::initializer_list<std::size_t> word, long c = 1) {
  GammaElement u(g);
  u.add_term(Multiset::from_word(word), Rat(c));
  return u;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 5) - 2;
  return m;
}

// Coefficient of e^[A] in x^[n] is prod x_i^{a_i}: brute force over the
// expansion of (sum x_i e_i)^{tensor n} / symmetrization.
std::vector<Int> divided_power_oracle(std::vector<Int> const& x, std::size_t n) {
  GammaModule g(x.size(), n);
  std::vector<Int> out;
  for (auto const& a : g.basis()) {
    Int c = 1;
    for (auto const& e : a.entries()) c *= power(x[e.index], e.multiplicity);
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(Gamma, Dimensions) {
  for (std::size_t k = 1; k <= 9; ++k)
    for (std::size_t n = 0; n <= 3; ++n)
      EXPECT_EQ(Int(static_cast<unsigned long>(GammaModule(k, n).dimension())),
                binomial(static_cast<long>(k + n) - 1, n));
}

TEST(DividedPower, Examples) {
  GammaModule g(2, 2);
  FreeModule z{2};
  EXPECT_EQ(divided_power(g, Element::basis(z, 0)), term(g, {0, 0}));
  EXPECT_TRUE(divided_power(g, Element(z)).is_zero());
  EXPECT_EQ(divided_power(g, Element(std::vector<Int>{1, 1})),
            term(g, {0, 0}) + term(g, {0, 1}) + term(g, {1, 1}));
}

TEST(DividedPower, MonomialCoefficientsAndHomogeneity) {
  std::mt19937_64 rng(3);
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      GammaModule g(k, n);
      for (int t = 0; t < 6; ++t) {
        std::vector<Int> x(k);
        for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
        Element ex(x);
        EXPECT_EQ(divided_power_vector(g, x), divided_power_oracle(x, n));
        Int r = static_cast<long>(rng() % 7) - 3;
        EXPECT_EQ(divided_power(g, r * ex), power(r, n) * divided_power(g, ex));
      }
    }
}

TEST(ProductOfElements, Examples) {
  GammaModule g2(2, 2), g1(1, 2);
  FreeModule z2{2}, z1{1};
  auto e1 = Element::basis(z2, 0), e2 = Element::basis(z2, 1);
  EXPECT_EQ(product_of_elements(g2, {e1, e2}), term(g2, {0, 1}));
  auto e = Element::basis(z1, 0);
  EXPECT_EQ(product_of_elements(g1, {e, e}), term(g1, {0, 0}, 2));
  EXPECT_TRUE(product_of_elements(g2, {e1, Element(z2)}).is_zero());
}

TEST(ProductOfElements, MultilinearAndSymmetric) {
  std::mt19937_64 rng(4);
  GammaModule g(3, 3);
  FreeModule z{3};
  auto rnd = [&] {
    Element x(z);
    for (std::size_t i = 0; i < 3; ++i) x += Int(static_cast<long>(rng() % 5) - 2) * Element::basis(z, i);
    return x;
  };
  for (int t = 0; t < 10; ++t) {
    auto a = rnd(), b = rnd(), c = rnd(), d = rnd();
    EXPECT_EQ(product_of_elements(g, {a + d, b, c}),
              product_of_elements(g, {a, b, c}) + product_of_elements(g, {d, b, c}));
    EXPECT_EQ(product_of_elements(g, {a, b, c}), product_of_elements(g, {c, a, b}));
    // x . x . x = 3! x^[3].
    EXPECT_EQ(product_of_elements(g, {a, a, a}), Int(6) * divided_power(g, a));
  }
}

TEST(OrbitEmbedding, RoundTrip) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      GammaModule g(k, n);
      for (auto const& a : g.basis()) {
        auto u = GammaElement::basis(g, a);
        auto t = embed_symmetric(u);
        EXPECT_TRUE(is_symmetric_tensor(t, k, n));
        EXPECT_EQ(project_symmetric(g, t), u);
        // One entry per distinct rearrangement, each equal to 1.
        Rat total = 0;
        for (auto const& v : t) total += v;
        Int count = factorial(n);
        for (auto const& e : a.entries()) count /= factorial(e.multiplicity);
        EXPECT_EQ(total, Rat(count));
      }
    }
}

TEST(GammaOfHom, IdentityScalarsAndFunctoriality) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    GammaModule g(2, n);
    EXPECT_EQ(gamma_of_hom(Hom::identity(FreeModule{2}), n), IntMatrix::identity(g.dimension()));
    for (long r = -3; r <= 3; ++r)
      EXPECT_EQ(gamma_of_hom(Hom(Int(r) * IntMatrix::identity(2)), n),
                power(Int(r), n) * IntMatrix::identity(g.dimension()));
    for (int t = 0; t < 5; ++t) {
      Hom a(random_matrix(rng, 3, 2)), b(random_matrix(rng, 2, 3));
      EXPECT_EQ(gamma_of_hom(compose(b, a), n), gamma_of_hom(b, n) * gamma_of_hom(a, n));
      // Naturality of x -> x^[n].
      Element x(std::vector<Int>{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2});
      GammaModule g3(3, n);
      auto lhs = divided_power(g3, apply(a, x));
      auto img = gamma_of_hom(a, n).apply(std::span<Int const>(divided_power(g, x).to_int_vector()));
      EXPECT_EQ(lhs, GammaElement::from_vector(g3, std::span<Int const>(img)));
    }
  }
}

TEST(Schur, UnitAssociativityAndPowers) {
  std::mt19937_64 rng(6);
  for (std::size_t n = 1; n <= 3; ++n) {
    GammaModule g(4, n);
    auto one = gamma_identity(g);
    for (int t = 0; t < 4; ++t) {
      auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2), c = random_matrix(rng, 2, 2);
      auto da = divided_power(g, flatten(a)), db = divided_power(g, flatten(b)), dc = divided_power(g, flatten(c));
      EXPECT_EQ(schur_product(one, da), da);
      EXPECT_EQ(schur_product(da, one), da);
      EXPECT_EQ(schur_product(da, db), divided_power(g, flatten(a * b)));
      auto u = da + Int(2) * db, v = db - dc;
      EXPECT_EQ(schur_product(schur_product(u, v), dc), schur_product(u, schur_product(v, dc)));
      EXPECT_EQ(schur_product(u, v + dc), schur_product(u, v) + schur_product(u, dc));
    }
  }
  GammaModule bad(3, 2);
  EXPECT_THROW(gamma_identity(bad), shape_error);
}

TEST(Schur, Rank1Multiplication) {
  // For End(Z), Gamma^n is Z and the Schur product is multiplication.
  GammaModule g(1, 3);
  auto u = term(g, {0, 0, 0}, 3), v = term(g, {0, 0, 0}, -5);
  EXPECT_EQ(schur_product(u, v), term(g, {0, 0, 0}, -15));
}
