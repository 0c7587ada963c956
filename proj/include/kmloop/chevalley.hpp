#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kmloop/eigen_support.hpp"
#include "kmloop/rootsys.hpp"

namespace kmloop {

/// Sparse integer combination of basis labels, sorted by label index.
using SparseVec = std::vector<std::pair<int, std::int64_t>>;

/// Element of g (or g (x) S) as a dense coordinate vector over the Chevalley basis.
template <typename T>
using LieElement = ExactVector<T>;

/// Chevalley basis {e_alpha, h_i} with its integral structure table.
///
/// Basis order is by descending height: e_alpha for positive alpha from the
/// highest root down, then h_1..h_N, then e_{-alpha} with |height| increasing.
/// With this order ad e_alpha is strictly upper triangular for alpha > 0.
///
/// Signs: e_beta = [e_i, e_{beta - alpha_i}] / (q + 1) with i the smallest
/// node such that beta - alpha_i is a root, and e_{-beta} = -omega(e_beta)
/// for the Chevalley involution omega.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dimension() const { return dim_; }

  /// Basis index of e_alpha for root index alpha.
  int e(int root) const;
  /// Basis index of h_i.
  int h(int i) const { return rs_.num_positive() + i; }
  /// Root index of a basis label, or -1 for the Cartan labels.
  int root_of(int b) const { return root_of_[static_cast<std::size_t>(b)]; }
  bool is_cartan(int b) const { return root_of(b) < 0; }
  /// Weight of a basis label in simple-root coordinates (zero for h_i).
  Root weight(int b) const;

  /// e.g. "e[1,1]", "f[0,1]" (for e_{-alpha}), "h2".
  std::string label(int b) const;

  /// [b1, b2] as a combination of basis labels.
  const SparseVec& bracket_basis(int b1, int b2) const {
    return table_[static_cast<std::size_t>(b1) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(b2)];
  }

  /// N_{alpha,beta} with [e_alpha, e_beta] = N e_{alpha+beta}; 0 when
  /// alpha + beta is not a root.
  int structure_constant(int alpha, int beta) const;

  /// h_alpha = [e_alpha, e_{-alpha}] as coefficients on h_1..h_N.
  Eigen::VectorXi coroot_vector(int root) const;

  /// ad b as an integer matrix.
  Eigen::MatrixXi ad(int b) const;

  template <typename T>
  LieElement<T> basis_vector(int b) const {
    LieElement<T> v = LieElement<T>::Zero(dim_);
    v(b) = T(1);
    return v;
  }

  template <typename T>
  LieElement<T> bracket(const LieElement<T>& x, const LieElement<T>& y) const {
    LieElement<T> out = LieElement<T>::Zero(dim_);
    for (int a = 0; a < dim_; ++a) {
      if (is_zero(x(a))) continue;
      for (int b = 0; b < dim_; ++b) {
        if (is_zero(y(b))) continue;
        const SparseVec& s = bracket_basis(a, b);
        if (s.empty()) continue;
        T c = x(a) * y(b);
        for (const auto& [k, n] : s) out(k) += c * T(Scalar(n));
      }
    }
    return out;
  }

  /// ad x as a matrix over T.
  template <typename T>
  ExactMatrix<T> ad_matrix(const LieElement<T>& x) const {
    ExactMatrix<T> m = ExactMatrix<T>::Zero(dim_, dim_);
    for (int a = 0; a < dim_; ++a) {
      if (is_zero(x(a))) continue;
      for (int b = 0; b < dim_; ++b)
        for (const auto& [k, n] : bracket_basis(a, b)) m(k, b) += x(a) * T(Scalar(n));
    }
    return m;
  }

 private:
  RootSystem rs_;
  int dim_;
  std::vector<int> root_of_;
  std::vector<SparseVec> table_;
};

ChevalleyBasis structure_constants(const RootSystem& rs);

inline int dimension(const ChevalleyBasis& cb) { return cb.dimension(); }

/// Nonzero brackets as [label, label, [[label, n], ...]] in basis order.
nlohmann::ordered_json structure_table_json(const ChevalleyBasis& cb);

/// Lie algebra automorphism lifting a diagram automorphism, normalized by
/// e_i -> e_pi(i), f_i -> f_pi(i), h_i -> h_pi(i). It is a signed
/// permutation of the Chevalley basis.
struct LieAutomorphism {
  DiagramAutomorphism diagram;
  int order = 1;
  /// Basis label b maps to sign[b] * image[b].
  std::vector<int> image;
  std::vector<int> sign;
  Eigen::MatrixXi matrix;

  /// epsilon_alpha with M e_alpha = epsilon_alpha e_{pi(alpha)}.
  int root_sign(const ChevalleyBasis& cb, int root) const { return sign[static_cast<std::size_t>(cb.e(root))]; }

  template <typename T>
  LieElement<T> apply(const LieElement<T>& x) const {
    LieElement<T> out = LieElement<T>::Zero(x.size());
    for (Eigen::Index b = 0; b < x.size(); ++b)
      if (!is_zero(x(b))) out(image[static_cast<std::size_t>(b)]) = sign[static_cast<std::size_t>(b)] > 0 ? x(b) : T(-x(b));
    return out;
  }
};

/// Raised when the lift does not produce a signed permutation.
class LiftError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

LieAutomorphism lift_automorphism(const ChevalleyBasis& cb, const DiagramAutomorphism& d);

/// M[x, y] = [Mx, My] on every pair of basis labels.
bool is_lie_automorphism(const ChevalleyBasis& cb, const LieAutomorphism& m);

}  // namespace kmloop
