#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms with their
// unimodular transforms, fraction-free determinants, integer system solving
// and a small rational kernel. Everything is templated on the scalar so the
// same code runs on machine integers and on arbitrary precision integers;
// the library itself uses cayci::Integer.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "cayci/scalar.hpp"

namespace cayci {

template <class Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> H;  ///< row-style Hermite normal form
  Matrix<Scalar> U;  ///< unimodular, U * A == H
};

template <class Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;  ///< unimodular, rows x rows
  Matrix<Scalar> D;  ///< diagonal, same shape as the source
  Matrix<Scalar> V;  ///< unimodular, cols x cols
  Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < rank; ++i) d.push_back(D(i, i));
    return d;
  }
};

namespace detail {

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

/// Floor division; b != 0.
template <class Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Returns (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0.
template <class Scalar>
std::tuple<Scalar, Scalar, Scalar> ext_gcd(Scalar a, Scalar b) {
  Scalar x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Scalar q = a / b;
    Scalar r = a - q * b;
    a = b;
    b = r;
    Scalar t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) return {Scalar(-a), Scalar(-x0), Scalar(-y0)};
  return {a, x0, y0};
}

template <class Scalar>
void swap_rows(Matrix<Scalar>& m, Index i, Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

template <class Scalar>
void swap_cols(Matrix<Scalar>& m, Index i, Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}

/// rows (i, j) <- (x*ri + y*rj, u*ri + v*rj); the 2x2 block must be unimodular.
template <class Scalar>
void combine_rows(Matrix<Scalar>& m, Index i, Index j, const Scalar& x, const Scalar& y,
                  const Scalar& u, const Scalar& v) {
  for (Index c = 0; c < m.cols(); ++c) {
    Scalar a = m(i, c), b = m(j, c);
    m(i, c) = x * a + y * b;
    m(j, c) = u * a + v * b;
  }
}

template <class Scalar>
void add_row_multiple(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  for (Index c = 0; c < m.cols(); ++c) m(target, c) += q * m(source, c);
}

template <class Scalar>
void add_col_multiple(Matrix<Scalar>& m, Index target, Index source, const Scalar& q) {
  for (Index r = 0; r < m.rows(); ++r) m(r, target) += q * m(r, source);
}

}  // namespace detail

/// Row-style Hermite normal form: U*A = H with H in upper echelon form, every
/// pivot positive and every entry above a pivot reduced into [0, pivot).
/// Zero rows are collected at the bottom. The form is unique for a given row
/// lattice, so two matrices span the same row lattice iff their HNFs agree.
/// Lattices store their bases as columns, so their canonical basis is the
/// transpose of this (a lower-left column echelon form).
template <class Scalar>
HermiteDecomposition<Scalar> hnf(const Matrix<Scalar>& a) {
  if (a.size() == 0) throw std::invalid_argument("hnf: empty matrix");
  using detail::combine_rows;
  const Index m = a.rows(), n = a.cols();
  Matrix<Scalar> h = a;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(m, m);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    for (Index i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        detail::swap_rows(h, r, i);
        detail::swap_rows(u, r, i);
        continue;
      }
      auto [g, x, y] = detail::ext_gcd<Scalar>(h(r, c), h(i, c));
      Scalar p = h(r, c) / g, q = h(i, c) / g;
      combine_rows<Scalar>(h, r, i, x, y, Scalar(-q), p);
      combine_rows<Scalar>(u, r, i, x, y, Scalar(-q), p);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.row(r) *= Scalar(-1);
      u.row(r) *= Scalar(-1);
    }
    for (Index i = 0; i < r; ++i) {
      Scalar q = detail::floor_div<Scalar>(h(i, c), h(r, c));
      if (q != 0) {
        detail::add_row_multiple<Scalar>(h, i, r, Scalar(-q));
        detail::add_row_multiple<Scalar>(u, i, r, Scalar(-q));
      }
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

/// Number of nonzero rows of the HNF.
template <class Scalar>
Index rank(const Matrix<Scalar>& a) {
  if (a.size() == 0) return 0;
  const auto h = hnf(a).H;
  Index r = 0;
  for (Index i = 0; i < h.rows(); ++i)
    if (!h.row(i).isZero()) ++r;
  return r;
}

/// Smith normal form U*A*V = D. Pivot: entry of smallest nonzero magnitude in
/// the active block, ties broken by (row, col) order.
template <class Scalar>
SmithDecomposition<Scalar> snf(const Matrix<Scalar>& a) {
  if (a.size() == 0) throw std::invalid_argument("snf: empty matrix");
  using detail::abs_value;
  const Index m = a.rows(), n = a.cols();
  Matrix<Scalar> d = a;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);
  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    bool exhausted = false;
    for (;;) {
      Index pr = -1, pc = -1;
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs_value<Scalar>(d(i, j)) < abs_value<Scalar>(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        exhausted = true;
        break;
      }
      detail::swap_rows(d, t, pr);
      detail::swap_rows(u, t, pr);
      detail::swap_cols(d, t, pc);
      detail::swap_cols(v, t, pc);

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Scalar q = d(i, t) / d(t, t);
        detail::add_row_multiple<Scalar>(d, i, t, Scalar(-q));
        detail::add_row_multiple<Scalar>(u, i, t, Scalar(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Scalar q = d(t, j) / d(t, t);
        detail::add_col_multiple<Scalar>(d, j, t, Scalar(-q));
        detail::add_col_multiple<Scalar>(v, j, t, Scalar(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      detail::add_row_multiple<Scalar>(d, t, bad, Scalar(1));
      detail::add_row_multiple<Scalar>(u, t, bad, Scalar(1));
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return {std::move(u), std::move(d), std::move(v), t};
}

/// Bareiss fraction-free elimination.
template <class Scalar>
Scalar det(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix is not square");
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      detail::swap_rows(m, k, p);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <class Scalar>
bool is_unimodular(const Matrix<Scalar>& a) {
  const Scalar d = det(a);
  return d == 1 || d == -1;
}

/// An integer x with A*x == b, or nullopt when none exists.
template <class Scalar>
std::optional<Vector<Scalar>> solve_integer(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const auto s = snf(a);
  const Vector<Scalar> c = s.U * b;
  Vector<Scalar> y = Vector<Scalar>::Zero(a.cols());
  for (Index i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c(i) % s.D(i, i) != 0) return std::nullopt;
      y(i) = c(i) / s.D(i, i);
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return Vector<Scalar>(s.V * y);
}

/// Gauss-Jordan inverse over the rationals; nullopt when singular.
std::optional<RatMatrix> rational_inverse(const RatMatrix& a);

/// The inverse of an integer matrix when it is itself integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
/// Converts back when every entry is integral.
std::optional<IntMatrix> to_integer(const RatMatrix& a);

extern template HermiteDecomposition<Integer> hnf<Integer>(const IntMatrix&);
extern template SmithDecomposition<Integer> snf<Integer>(const IntMatrix&);
extern template Integer det<Integer>(const IntMatrix&);
extern template Index rank<Integer>(const IntMatrix&);
extern template bool is_unimodular<Integer>(const IntMatrix&);
extern template std::optional<IntVector> solve_integer<Integer>(const IntMatrix&, const IntVector&);

}  // namespace cayci
