#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/matrix.hpp"

namespace numfun {

/// The free module Z^rank.
struct FreeModule {
  std::size_t rank = 0;
  friend bool operator==(FreeModule const&, FreeModule const&) = default;
};

class Element {
 public:
  Element() = default;
  explicit Element(FreeModule m) : module_(m), coords_(m.rank, 0) {}
  Element(FreeModule m, std::vector<Int> coords)
      : module_(m), coords_(std::move(coords)) {
    if (coords_.size() != module_.rank)
      throw shape_error("element length does not match module rank");
  }
  explicit Element(std::vector<Int> coords)
      : module_{coords.size()}, coords_(std::move(coords)) {}

  static Element basis(FreeModule m, std::size_t i) {
    Element e(m);
    e.coords_.at(i) = 1;
    return e;
  }

  FreeModule module() const { return module_; }
  std::vector<Int> const& coords() const { return coords_; }
  Int const& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const {
    for (auto const& c : coords_)
      if (c != 0) return false;
    return true;
  }

  Element& operator+=(Element const& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Element& operator-=(Element const& o) {
    check(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend Element operator+(Element a, Element const& b) { return a += b; }
  friend Element operator-(Element a, Element const& b) { return a -= b; }
  friend Element operator-(Element a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Element operator*(Int const& r, Element a) {
    for (auto& c : a.coords_) c *= r;
    return a;
  }
  friend bool operator==(Element const&, Element const&) = default;

 private:
  void check(Element const& o) const {
    if (module_ != o.module_) throw shape_error("elements of different modules");
  }

  FreeModule module_;
  std::vector<Int> coords_;
};

/// A homomorphism Z^source -> Z^target as a target x source matrix.
class Hom {
 public:
  Hom() = default;
  Hom(FreeModule source, FreeModule target, IntMatrix m)
      : source_(source), target_(target), matrix_(std::move(m)) {
    if (matrix_.rows() != target_.rank || matrix_.cols() != source_.rank)
      throw shape_error("hom matrix does not match ranks");
  }
  explicit Hom(IntMatrix m)
      : source_{m.cols()}, target_{m.rows()}, matrix_(std::move(m)) {}

  static Hom identity(FreeModule m) {
    return Hom(m, m, IntMatrix::identity(m.rank));
  }
  static Hom zero(FreeModule source, FreeModule target) {
    return Hom(source, target, IntMatrix(target.rank, source.rank));
  }

  FreeModule source() const { return source_; }
  FreeModule target() const { return target_; }
  IntMatrix const& matrix() const { return matrix_; }

  friend bool operator==(Hom const&, Hom const&) = default;

 private:
  FreeModule source_, target_;
  IntMatrix matrix_;
};

/// g after f.
inline Hom compose(Hom const& g, Hom const& f) {
  if (g.source() != f.target()) throw shape_error("compose: shape mismatch");
  return Hom(f.source(), g.target(), g.matrix() * f.matrix());
}

inline Hom identity(FreeModule m) { return Hom::identity(m); }

inline Element apply(Hom const& f, Element const& x) {
  if (x.module() != f.source()) throw shape_error("apply: module mismatch");
  return Element(f.target(), f.matrix().apply(x.coords()));
}

/// A not-necessarily-linear map between free modules. The evaluator must be
/// pure.
class SetMap {
 public:
  using Evaluator = std::function<Element(Element const&)>;

  SetMap(FreeModule source, FreeModule target, Evaluator eval)
      : source_(source), target_(target), eval_(std::move(eval)) {}

  FreeModule source() const { return source_; }
  FreeModule target() const { return target_; }

  Element operator()(Element const& x) const {
    if (x.module() != source_) throw shape_error("setmap: argument module");
    Element y = eval_(x);
    if (y.module() != target_) throw shape_error("setmap: value module");
    return y;
  }

 private:
  FreeModule source_, target_;
  Evaluator eval_;
};

inline SetMap linear_as_setmap(Hom const& f) {
  return SetMap(f.source(), f.target(),
                [f](Element const& x) { return apply(f, x); });
}

/// Row-major flattening of a matrix as an element of Z^(rows*cols).
inline Element flatten(IntMatrix const& m) {
  return Element(std::vector<Int>(m.data().begin(), m.data().end()));
}

inline IntMatrix unflatten(Element const& e, std::size_t rows,
                           std::size_t cols) {
  if (e.coords().size() != rows * cols) throw shape_error("unflatten: length");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = e[i * cols + j];
  return m;
}

/// Matrix unit E_{ij} of shape rows x cols; index = i*cols + j.
inline IntMatrix matrix_unit(std::size_t rows, std::size_t cols,
                             std::size_t index) {
  IntMatrix m(rows, cols);
  m(index / cols, index % cols) = 1;
  return m;
}

}  // namespace numfun
