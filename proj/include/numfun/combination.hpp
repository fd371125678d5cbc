#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/matrix.hpp"
#include "numfun/multiset.hpp"

namespace numfun {

/// Finitely supported Q-combination of the basis of `Space`, keyed by
/// multiset. Integral elements have integer coefficients.
template <class Space>
class BasisCombination {
 public:
  explicit BasisCombination(Space alg) : space_(std::move(alg)) {}

  static BasisCombination basis(Space const& alg, Multiset const& x) {
    BasisCombination e(alg);
    alg.index_of(x);
    e.coeffs_[x] = 1;
    return e;
  }

  static BasisCombination from_vector(Space const& alg,
                                std::span<Rat const> v) {
    if (v.size() != alg.dimension()) throw shape_error("coefficient vector length");
    BasisCombination e(alg);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) e.coeffs_[alg.basis()[i]] = v[i];
    return e;
  }

  static BasisCombination from_vector(Space const& alg,
                                std::span<Int const> v) {
    std::vector<Rat> q(v.begin(), v.end());
    return from_vector(alg, std::span<Rat const>(q));
  }

  Space const& space() const { return space_; }
  std::map<Multiset, Rat> const& coeffs() const { return coeffs_; }

  Rat coefficient(Multiset const& x) const {
    auto it = coeffs_.find(x);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  void add_term(Multiset const& x, Rat const& c) {
    if (c == 0) return;
    space_.index_of(x);
    auto [it, fresh] = coeffs_.try_emplace(x, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::vector<Rat> to_vector() const {
    std::vector<Rat> v(space_.dimension(), 0);
    for (auto const& [x, c] : coeffs_) v[space_.index_of(x)] = c;
    return v;
  }

  /// Requires integral coefficients.
  std::vector<Int> to_int_vector() const {
    std::vector<Int> v(space_.dimension(), 0);
    for (auto const& [x, c] : coeffs_) {
      if (!numfun::is_integral(c)) throw std::domain_error("non-integral");
      v[space_.index_of(x)] = c.get_num();
    }
    return v;
  }

  bool is_integral() const {
    for (auto const& [x, c] : coeffs_)
      if (!numfun::is_integral(c)) return false;
    return true;
  }
  bool is_zero() const { return coeffs_.empty(); }

  BasisCombination& operator+=(BasisCombination const& o) {
    check(o);
    for (auto const& [x, c] : o.coeffs_) add_term(x, c);
    return *this;
  }
  BasisCombination& operator-=(BasisCombination const& o) {
    check(o);
    for (auto const& [x, c] : o.coeffs_) add_term(x, -c);
    return *this;
  }
  BasisCombination& operator*=(Rat const& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [x, c] : coeffs_) c *= s;
    return *this;
  }
  friend BasisCombination operator+(BasisCombination a, BasisCombination const& b) {
    return a += b;
  }
  friend BasisCombination operator-(BasisCombination a, BasisCombination const& b) {
    return a -= b;
  }
  friend BasisCombination operator-(BasisCombination a) { return a *= Rat(-1); }
  friend BasisCombination operator*(Rat const& s, BasisCombination a) { return a *= s; }
  friend BasisCombination operator*(Int const& s, BasisCombination a) {
    return a *= Rat(s);
  }
  friend bool operator==(BasisCombination const& a, BasisCombination const& b) {
    return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check(BasisCombination const& o) const {
    if (!(space_ == o.space_)) throw shape_error("elements of different spaces");
  }

  Space space_;
  std::map<Multiset, Rat> coeffs_;
};

}  // namespace numfun
