#pragma once

// Exact dense linear algebra over the fields Q and Q(xi).

#include <vector>

#include "kmloop/eigen_support.hpp"

namespace kmloop {

/// Reduced row echelon form, computed in place. Returns the pivot columns.
template <typename F>
std::vector<Eigen::Index> rref_in_place(ExactMatrix<F>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const F inv = m(row, col).inverse();
    for (Eigen::Index j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
Eigen::Index rank(ExactMatrix<F> m) {
  return static_cast<Eigen::Index>(rref_in_place(m).size());
}

/// Basis of the right null space, one column per free variable (that variable
/// set to 1, the other free variables 0).
template <typename F>
ExactMatrix<F> kernel(ExactMatrix<F> m) {
  const Eigen::Index n = m.cols();
  std::vector<Eigen::Index> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  ExactMatrix<F> ker = ExactMatrix<F>::Zero(n, n - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    ker(f, k) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const auto ri = static_cast<Eigen::Index>(r);
      if (!is_zero(m(ri, f))) ker(pivots[r], k) = -m(ri, f);
    }
    ++k;
  }
  return ker;
}

/// Solves a x = b; returns false when the system is inconsistent.
template <typename F>
bool solve(const ExactMatrix<F>& a, const ExactVector<F>& b, ExactVector<F>& x) {
  ExactMatrix<F> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  x = ExactVector<F>::Zero(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return false;
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), a.cols());
  }
  return true;
}

template <typename F>
F determinant(ExactMatrix<F> m) {
  const Eigen::Index n = m.rows();
  F det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    const F inv = m(c, c).inverse();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Integer matrix to an exact field matrix.
template <typename F>
ExactMatrix<F> to_exact(const Eigen::MatrixXi& m) {
  ExactMatrix<F> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = F(static_cast<std::int64_t>(m(i, j)));
  return out;
}

/// Coordinates of c over the base field: [c] when the fields agree,
/// [a, b] for c = a + b*xi when the base is Q and c lives in Q(xi).
inline ExactVector<Scalar> base_coordinates(const Scalar& c, Field coefficients, Field base) {
  if (coefficients == base) {
    ExactVector<Scalar> v(1);
    v(0) = c;
    return v;
  }
  ExactVector<Scalar> v(2);
  v(0) = Scalar(c.a());
  v(1) = Scalar(c.b());
  return v;
}

}  // namespace kmloop
