#pragma once

// Independent oracles shared by the unit tests and the acceptance run. They
// use only the Cartan matrix, the root list or plain floating point.

#include <cmath>
#include <complex>
#include <map>
#include <set>
#include <vector>

#include "kmloop/chevalley.hpp"

namespace kmloop::oracle {

inline std::vector<FiniteType> types_up_to_rank(int max_rank) {
  std::vector<FiniteType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(FiniteType::make(Letter::A, n));
  for (int n = 3; n <= max_rank; ++n) out.push_back(FiniteType::make(Letter::B, n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(FiniteType::make(Letter::C, n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(FiniteType::make(Letter::D, n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back(FiniteType::make(Letter::E, n));
  if (max_rank >= 4) out.push_back(FiniteType::make(Letter::F, 4));
  out.push_back(FiniteType::make(Letter::G, 2));
  return out;
}

using Acc = std::map<int, std::int64_t>;

inline void bracket_into(const ChevalleyBasis& cb, const SparseVec& x, int z, std::int64_t scale, Acc& out) {
  for (const auto& [k, c] : x)
    for (const auto& [m, d] : cb.bracket_basis(k, z)) out[m] += scale * c * d;
}

inline bool jacobi_holds(const ChevalleyBasis& cb, int a, int b, int c) {
  Acc acc;
  bracket_into(cb, cb.bracket_basis(a, b), c, 1, acc);
  bracket_into(cb, cb.bracket_basis(b, c), a, 1, acc);
  bracket_into(cb, cb.bracket_basis(c, a), b, 1, acc);
  for (const auto& kv : acc)
    if (kv.second != 0) return false;
  return true;
}

// Oracle: largest p with beta - p alpha a root, read from the root list.
inline int string_p(const RootSystem& rs, const Root& alpha, const Root& beta) {
  int p = 0;
  while (rs.contains(beta - (p + 1) * alpha)) ++p;
  return p;
}

// Oracle: eigenspace dimensions from the character of the signed permutation,
// dim g_j = (1/r) sum_m zeta^(-jm) tr(M^m), evaluated in floating point.
inline std::vector<int> character_dims(const LieAutomorphism& m) {
  const int r = m.order;
  const double pi = std::acos(-1.0);
  std::vector<int> out;
  for (int j = 0; j < r; ++j) {
    std::complex<double> sum = 0;
    Eigen::MatrixXi power = Eigen::MatrixXi::Identity(m.matrix.rows(), m.matrix.cols());
    for (int k = 0; k < r; ++k) {
      sum += std::polar(1.0, -2 * pi * j * k / r) * static_cast<double>(power.trace());
      power = m.matrix * power;
    }
    out.push_back(static_cast<int>(std::lround(sum.real() / r)));
  }
  return out;
}

// Oracle: extended Cartan matrix from the reflection-closure highest root.
inline Eigen::MatrixXi oracle_extended_cartan(const Eigen::MatrixXi& a) {
  const auto n = static_cast<int>(a.rows());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    roots.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    auto b = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += a(i, j) * b[static_cast<std::size_t>(j)];
      auto s = b;
      s[static_cast<std::size_t>(i)] -= pair;
      if (roots.insert(s).second) queue.push_back(s);
    }
  }
  std::vector<int> theta;
  int best = -1;
  for (const auto& v : roots) {
    int h = 0;
    for (int x : v) h += x;
    if (h > best) best = h, theta = v;
  }
  // Symmetrizer d_i a_ij = d_j a_ji, then theta^vee = sum_i theta_i d_i / ((theta, theta) / 2) alpha_i^vee.
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  d(0) = 1;
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d(i) != 0 && d(j) == 0 && a(i, j) != 0) d(j) = d(i) * a(i, j) / a(j, i);
  Eigen::VectorXd th(n);
  for (int i = 0; i < n; ++i) th(i) = theta[static_cast<std::size_t>(i)];
  double norm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += th(i) * th(j) * d(i) * a(i, j);
  Eigen::VectorXd c(n);
  for (int i = 0; i < n; ++i) c(i) = th(i) * 2 * d(i) / norm;
  Eigen::MatrixXi ext(n + 1, n + 1);
  ext(0, 0) = 2;
  for (int j = 0; j < n; ++j) {
    double a0j = 0, aj0 = 0;
    for (int i = 0; i < n; ++i) {
      a0j -= c(i) * a(i, j);
      aj0 -= a(j, i) * th(i);
    }
    ext(0, j + 1) = static_cast<int>(std::lround(a0j));
    ext(j + 1, 0) = static_cast<int>(std::lround(aj0));
  }
  ext.bottomRightCorner(n, n) = a;
  return ext;
}

}  // namespace kmloop::oracle
