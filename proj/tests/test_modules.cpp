#include <gtest/gtest.h>

#include <random>

#include "numfun/modules.hpp"

using namespace numfun;

namespace {

Hom random_hom(std::mt19937_64& rng, std::size_t p, std::size_t q) {
  IntMatrix m(q, p);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) m(i, j) = static_cast<long>(rng() % 7) - 3;
  return Hom(m);
}

}  // namespace

TEST(Hom, ComposeAndApply) {
  Hom f(IntMatrix{{1, 2}, {0, 1}, {3, -1}});
  EXPECT_EQ(compose(identity(f.target()), f), f);
  EXPECT_EQ(compose(f, identity(f.source())), f);
  Hom d(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(apply(d, Element(std::vector<Int>{1, 1})), Element(std::vector<Int>{2, 3}));
  EXPECT_THROW(compose(f, f), shape_error);
  EXPECT_THROW(apply(f, Element(FreeModule{3})), shape_error);
}

TEST(Hom, ComposeIsAssociative) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto a = random_hom(rng, 2, 3), b = random_hom(rng, 3, 1), c = random_hom(rng, 1, 2);
    EXPECT_EQ(compose(c, compose(b, a)), compose(compose(c, b), a));
    Element x(std::vector<Int>{Int(static_cast<long>(rng() % 9) - 4), 5});
    EXPECT_EQ(apply(compose(b, a), x), apply(b, apply(a, x)));
  }
}

TEST(SetMap, LinearMaps) {
  FreeModule z1{1};
  auto id = linear_as_setmap(Hom::identity(FreeModule{2}));
  auto zero = linear_as_setmap(Hom::zero(FreeModule{2}, z1));
  auto twice = linear_as_setmap(Hom(IntMatrix{{2}}));
  for (long a = -3; a <= 3; ++a) {
    Element x(std::vector<Int>{a, 1 - a});
    EXPECT_EQ(id(x), x);
    EXPECT_TRUE(zero(x).is_zero());
    Element y(std::vector<Int>{a});
    EXPECT_EQ(twice(y), Int(2) * y);
  }
  EXPECT_THROW(id(Element(z1)), shape_error);
}

TEST(Element, Arithmetic) {
  Element x(std::vector<Int>{1, -2}), y(std::vector<Int>{3, 4});
  EXPECT_EQ(x + y, Element(std::vector<Int>{4, 2}));
  EXPECT_EQ(x - y, Element(std::vector<Int>{-2, -6}));
  EXPECT_EQ(-x, Element(std::vector<Int>{-1, 2}));
  EXPECT_EQ(Int(3) * x, Element(std::vector<Int>{3, -6}));
  EXPECT_EQ(Element::basis(FreeModule{2}, 1), Element(std::vector<Int>{0, 1}));
  EXPECT_THROW(x + Element(FreeModule{3}), shape_error);
}

TEST(Flatten, RowMajorRoundTrip) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  Element e = flatten(m);
  EXPECT_EQ(e.coords(), (std::vector<Int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(unflatten(e, 2, 3), m);
  EXPECT_EQ(matrix_unit(2, 3, 4)(1, 1), 1);
  EXPECT_THROW(unflatten(e, 2, 2), shape_error);
}

TEST(Matrix, KroneckerMixedProduct) {
  IntMatrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 1}}, c{{2, -1}, {1, 0}}, d{{1, 0}, {5, 2}};
  EXPECT_EQ(kronecker(a, b) * kronecker(c, d), kronecker(a * c, b * d));
  EXPECT_EQ(determinant(a), -2);
  EXPECT_EQ(determinant(IntMatrix::identity(4)), 1);
}
