#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "numfun/arith.hpp"
#include "numfun/matrix.hpp"

namespace numfun {

namespace detail {

inline Int floor_div(Int const& a, Int const& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient rounded so that |a - q*b| <= |b|/2, which keeps entries small
// during elimination.
inline Int nearest_div(Int const& a, Int const& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int twice_r = 2 * r;
  if (abs(twice_r) > abs(b)) q += (sgn(b) == sgn(r)) ? 1 : -1;
  return q;
}

inline void axpy(std::vector<Int>& y, Int const& f, std::vector<Int> const& x) {
  if (f == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += f * x[i];
}

// Row echelon basis keyed by pivot column; insertion keeps the collection
// {basis rows} together with the residual a unimodular image of the inputs.
class Echelon {
 public:
  Echelon(std::size_t width, std::size_t pivot_width)
      : width_(width), pivot_width_(pivot_width), rows_(pivot_width) {}

  /// Inserts v; returns the residual, which is zero on the pivot columns.
  std::vector<Int> insert(std::vector<Int> v) {
    for (std::size_t c = 0; c < pivot_width_; ++c) {
      if (v[c] == 0) continue;
      auto& slot = rows_[c];
      if (!slot) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        slot = std::move(v);
        return std::vector<Int>(width_, 0);
      }
      auto& b = *slot;
      if (mpz_divisible_p(v[c].get_mpz_t(), b[c].get_mpz_t())) {
        Int q = v[c] / b[c];
        axpy(v, -q, b);
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[c].get_mpz_t(),
                 v[c].get_mpz_t());
      Int bc = b[c] / g, vc = v[c] / g;
      std::vector<Int> nb(width_), nv(width_);
      for (std::size_t j = 0; j < width_; ++j) {
        nb[j] = s * b[j] + t * v[j];
        nv[j] = bc * v[j] - vc * b[j];
      }
      b = std::move(nb);
      v = std::move(nv);
    }
    return v;
  }

  /// Rows sorted by pivot with entries above each pivot reduced to [0, p).
  std::vector<std::vector<Int>> reduced_rows() const {
    std::vector<std::size_t> piv;
    std::vector<std::vector<Int>> out;
    for (std::size_t c = 0; c < pivot_width_; ++c)
      if (rows_[c]) {
        piv.push_back(c);
        out.push_back(*rows_[c]);
      }
    for (std::size_t i = out.size(); i-- > 0;) {
      std::size_t c = piv[i];
      for (std::size_t r = 0; r < i; ++r) {
        Int q = floor_div(out[r][c], out[i][c]);
        axpy(out[r], -q, out[i]);
      }
    }
    return out;
  }

 private:
  std::size_t width_;
  std::size_t pivot_width_;
  std::vector<std::optional<std::vector<Int>>> rows_;
};

}  // namespace detail

/// A sublattice of Z^ambient, stored by its row Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient) {}

  static Lattice from_generators(std::vector<std::vector<Int>> const& gens,
                                 std::size_t ambient) {
    detail::Echelon e(ambient, ambient);
    for (auto const& g : gens) {
      if (g.size() != ambient) throw shape_error("lattice generator length");
      e.insert(g);
    }
    Lattice l(ambient);
    l.rows_ = e.reduced_rows();
    return l;
  }

  /// Lattice spanned by the rows of m.
  static Lattice row_span(IntMatrix const& m) {
    std::vector<std::vector<Int>> gens;
    gens.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      gens.emplace_back(m.row(i).begin(), m.row(i).end());
    return from_generators(gens, m.cols());
  }

  /// Lattice spanned by the columns of m.
  static Lattice column_span(IntMatrix const& m) {
    return row_span(m.transpose());
  }

  static Lattice full(std::size_t ambient) {
    return row_span(IntMatrix::identity(ambient));
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  std::vector<std::vector<Int>> const& basis_rows() const { return rows_; }

  IntMatrix basis() const { return IntMatrix::from_rows(rows_, ambient_); }

  bool contains(std::span<Int const> v) const {
    if (v.size() != ambient_) throw shape_error("lattice membership: length");
    std::vector<Int> w(v.begin(), v.end());
    for (auto const& r : rows_) {
      std::size_t c = pivot_of(r);
      if (!mpz_divisible_p(w[c].get_mpz_t(), r[c].get_mpz_t())) return false;
      detail::axpy(w, -(w[c] / r[c]), r);
    }
    return std::all_of(w.begin(), w.end(), [](Int const& x) { return x == 0; });
  }

  bool contains(Lattice const& other) const {
    for (auto const& r : other.rows_)
      if (!contains(r)) return false;
    return true;
  }

  friend bool operator==(Lattice const& a, Lattice const& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  static std::size_t pivot_of(std::vector<Int> const& r) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    return c;
  }

  std::size_t ambient_;
  std::vector<std::vector<Int>> rows_;
};

inline std::size_t rank(IntMatrix const& m) {
  return Lattice::row_span(m).rank();
}

inline std::size_t rank(RatMatrix const& m) {
  // Scale each row to integers; rank is unchanged.
  IntMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int den = 1;
    for (auto const& v : m.row(i)) den = lcm(den, Int(v.get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat x = m(i, j) * den;
      s(i, j) = x.get_num();
    }
  }
  return rank(s);
}

/// {x in Z^cols : A x = 0}; saturated by construction.
inline Lattice kernel_lattice(IntMatrix const& a) {
  std::size_t r = a.rows(), c = a.cols();
  detail::Echelon e(r + c, r);
  std::vector<std::vector<Int>> kernel;
  for (std::size_t j = 0; j < c; ++j) {
    std::vector<Int> v(r + c, 0);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, j);
    v[r + j] = 1;
    auto residual = e.insert(std::move(v));
    if (std::any_of(residual.begin() + static_cast<std::ptrdiff_t>(r),
                    residual.end(), [](Int const& x) { return x != 0; }))
      kernel.emplace_back(residual.begin() + static_cast<std::ptrdiff_t>(r),
                          residual.end());
  }
  return Lattice::from_generators(kernel, c);
}

/// (Q L) intersected with Z^ambient.
inline Lattice saturation(Lattice const& l) {
  auto orth = kernel_lattice(l.basis());
  return kernel_lattice(orth.basis());
}

inline Lattice lattice_intersection(Lattice const& a, Lattice const& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw shape_error("lattice_intersection: ambient ranks differ");
  std::size_t n = a.ambient_rank(), ra = a.rank(), rb = b.rank();
  // Solve sum_i s_i a_i = sum_j t_j b_j.
  IntMatrix m(n, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t x = 0; x < n; ++x) m(x, i) = a.basis_rows()[i][x];
  for (std::size_t j = 0; j < rb; ++j)
    for (std::size_t x = 0; x < n; ++x) m(x, ra + j) = -b.basis_rows()[j][x];
  auto ker = kernel_lattice(m);
  std::vector<std::vector<Int>> gens;
  for (auto const& k : ker.basis_rows()) {
    std::vector<Int> v(n, 0);
    for (std::size_t i = 0; i < ra; ++i)
      detail::axpy(v, k[i], a.basis_rows()[i]);
    gens.push_back(std::move(v));
  }
  return Lattice::from_generators(gens, n);
}

/// [Z^ambient : L], or nullopt when L has deficient rank.
inline std::optional<Int> index(Lattice const& l) {
  if (l.rank() != l.ambient_rank()) return std::nullopt;
  Int idx = 1;
  for (std::size_t i = 0; i < l.rank(); ++i) idx *= l.basis_rows()[i][i];
  return abs(idx);
}

/// A = U * S * V with U, V unimodular and S diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// Elimination state S = L A R with inverses tracked alongside.
struct SmithState {
  IntMatrix S, L, R, L_inv, R_inv;
  bool track;

  void swap_rows(std::size_t a, std::size_t b) {
    S.swap_rows(a, b);
    if (track) {
      L.swap_rows(a, b);
      L_inv.swap_cols(a, b);
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    S.swap_cols(a, b);
    if (track) {
      R.swap_cols(a, b);
      R_inv.swap_rows(a, b);
    }
  }
  void add_row(std::size_t dst, std::size_t src, Int const& f) {
    S.add_row_multiple(dst, src, f);
    if (track) {
      L.add_row_multiple(dst, src, f);
      L_inv.add_col_multiple(src, dst, -f);
    }
  }
  void add_col(std::size_t dst, std::size_t src, Int const& f) {
    S.add_col_multiple(dst, src, f);
    if (track) {
      R.add_col_multiple(dst, src, f);
      R_inv.add_row_multiple(src, dst, -f);
    }
  }
  void negate_row(std::size_t a) {
    S.negate_row(a);
    if (track) {
      L.negate_row(a);
      L_inv.negate_col(a);
    }
  }
};

inline void smith_reduce(SmithState& st) {
  IntMatrix& s = st.S;
  std::size_t rows = s.rows(), cols = s.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero |entry| in the trailing block, first in row-major scan.
    auto place_min = [&](std::size_t r0, std::size_t r1, std::size_t c0,
                         std::size_t c1) -> bool {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j)
          if (s(i, j) != 0 &&
              (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
            best = {i, j};
      if (!best) return false;
      st.swap_rows(t, best->first);
      st.swap_cols(t, best->second);
      return true;
    };
    if (!place_min(t, rows, t, cols)) return;
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) st.add_row(i, t, -nearest_div(s(i, t), s(t, t)));
      for (std::size_t i = t + 1; i < rows; ++i)
        if (s(i, t) != 0) dirty = true;
      if (dirty) {
        place_min(t, rows, t, t + 1);
        continue;
      }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (s(t, j) != 0) st.add_col(j, t, -nearest_div(s(t, j), s(t, t)));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (s(t, j) != 0) dirty = true;
      if (dirty) {
        place_min(t, t + 1, t, cols);
        continue;
      }
      // Pivot must divide the remaining block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      st.add_row(t, *offender, 1);
    }
    if (s(t, t) < 0) st.negate_row(t);
  }
}

}  // namespace detail

/// Deterministic Smith normal form (smallest-|pivot| strategy).
inline SmithDecomposition smith_normal_form(IntMatrix const& a) {
  detail::SmithState st{a,
                        IntMatrix::identity(a.rows()),
                        IntMatrix::identity(a.cols()),
                        IntMatrix::identity(a.rows()),
                        IntMatrix::identity(a.cols()),
                        true};
  detail::smith_reduce(st);
  return SmithDecomposition{st.L_inv, st.S, st.R_inv, st.L, st.R};
}

/// Diagonal of the Smith form without transforms.
inline std::vector<Int> smith_diagonal(IntMatrix const& a) {
  detail::SmithState st{a, {}, {}, {}, {}, false};
  detail::smith_reduce(st);
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    d.push_back(st.S(i, i));
  return d;
}

/// Structure of Z^rows / (column span of A): Z/d_1 + ... + Z^free_rank with
/// 1 < d_1 | d_2 | ...
struct CokernelInvariants {
  std::vector<Int> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  /// Order of the group; nullopt when infinite.
  std::optional<Int> order() const {
    if (free_rank != 0) return std::nullopt;
    Int o = 1;
    for (auto const& d : torsion) o *= d;
    return o;
  }
  friend bool operator==(CokernelInvariants const&,
                         CokernelInvariants const&) = default;
};

/// Invariants of Z^ambient / L.
inline CokernelInvariants quotient_invariants(Lattice const& l) {
  CokernelInvariants out;
  out.free_rank = l.ambient_rank() - l.rank();
  if (l.rank() == 0) return out;
  for (auto const& d : smith_diagonal(l.basis()))
    if (d != 1 && d != 0) out.torsion.push_back(d);
  return out;
}

inline CokernelInvariants cokernel_invariants(IntMatrix const& a) {
  return quotient_invariants(Lattice::column_span(a));
}

}  // namespace numfun
