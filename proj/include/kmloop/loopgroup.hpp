#pragma once

#include <stdexcept>
#include <vector>

#include "kmloop/twistloop.hpp"

namespace kmloop {

/// Raised when no Gamma-fixed element of the searched form exists.
class UnsupportedOrbit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense product that skips zero entries of either factor.
template <typename T>
ExactMatrix<T> sparse_product(const ExactMatrix<T>& a, const ExactMatrix<T>& b) {
  ExactMatrix<T> c = ExactMatrix<T>::Zero(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index k = 0; k < b.rows(); ++k) {
      if (is_zero(b(k, j))) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (!is_zero(a(i, k))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Point of G(S) (or G(S[eps])) in the adjoint representation, stored with
/// its inverse.
template <typename T>
struct GroupElement {
  ExactMatrix<T> matrix;
  ExactMatrix<T> inverse_matrix;

  static GroupElement identity(int dim) {
    ExactMatrix<T> id = ExactMatrix<T>::Identity(dim, dim);
    return {id, id};
  }
  int dim() const { return static_cast<int>(matrix.rows()); }
  GroupElement operator*(const GroupElement& o) const {
    return {sparse_product(matrix, o.matrix), sparse_product(o.inverse_matrix, inverse_matrix)};
  }
  GroupElement inverse() const { return {inverse_matrix, matrix}; }
  bool is_identity() const { return exactly_equal(matrix, ExactMatrix<T>::Identity(dim(), dim())); }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return exactly_equal(a.matrix, b.matrix); }
};

using LoopGroupElement = GroupElement<LaurentPoly>;
using DualGroupElement = GroupElement<DualNumber>;

/// Rows of canonical LaurentPoly renderings.
nlohmann::ordered_json to_json(const LoopGroupElement& g);

/// Integer matrices (ad e_alpha)^k / k! for k = 0, 1, ... until zero.
std::vector<Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>> divided_powers(const ChevalleyBasis& cb, int root);

/// x_alpha(u) = exp(u ad e_alpha).
template <typename T>
GroupElement<T> root_generator(const ChevalleyBasis& cb, int root, const T& u) {
  auto powers = divided_powers(cb, root);
  auto build = [&](const T& v) {
    const int d = cb.dimension();
    ExactMatrix<T> m = ExactMatrix<T>::Zero(d, d);
    T vk(1);
    for (std::size_t k = 0; k < powers.size(); ++k) {
      if (k > 0) vk = vk * v;
      if (is_zero(vk)) break;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (powers[k](i, j) != 0) m(i, j) += vk * T(LaurentPoly(Scalar(powers[k](i, j))));
    }
    return m;
  };
  return {build(u), build(T(-u))};
}

/// 1 + eps u ad h_i, the image of h_i(1 + eps u).
DualGroupElement infinitesimal_torus(const ChevalleyBasis& cb, int i, const LaurentPoly& u);

LaurentPoly apply_entry(const RingAut& g, const LaurentPoly& x);
DualNumber apply_entry(const RingAut& g, const DualNumber& x);

/// g -> M g^(gamma') M^-1: the ring automorphism entrywise, then
/// conjugation by the Lie automorphism.
template <typename T>
GroupElement<T> gamma_act(const GammaGenerator& gen, const GroupElement<T>& g) {
  auto conj = [&](const ExactMatrix<T>& a) {
    const auto d = a.rows();
    ExactMatrix<T> out(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i) {
        T v = apply_entry(gen.ring, a(i, j));
        if (gen.lie.sign[static_cast<std::size_t>(i)] * gen.lie.sign[static_cast<std::size_t>(j)] < 0) v = -v;
        out(gen.lie.image[static_cast<std::size_t>(i)], gen.lie.image[static_cast<std::size_t>(j)]) = v;
      }
    return out;
  };
  return {conj(g.matrix), conj(g.inverse_matrix)};
}

template <typename T>
bool is_gamma_fixed(const GaloisSetup& setup, const GroupElement<T>& g) {
  for (const auto& gen : setup.gens)
    if (!(gamma_act(gen, g) == g)) return false;
  return true;
}

/// k_alpha with sigma'(x_alpha(u)) = x_{sigma alpha}(k_alpha sigma'(u)),
/// checked at two values of u; +1 when Gamma is trivial. Throws LiftError
/// when neither sign fits.
int extract_sign(const GaloisSetup& setup, int root);

/// Gamma-fixed element supported on the sigma-orbit of alpha: the orbit
/// product, a correction x_{alpha + sigma alpha}(c) when that is a root, and
/// (case IIIb) symmetrization under omega for commuting factors.
LoopGroupElement twisted_orbit_element(const GaloisSetup& setup, int root, const LaurentPoly& u);

/// Gamma-fixed Lie elements obtained from the kernel of G(S[eps]) -> G(S):
/// for each degree the elements 1 + eps ad(c t^(k/r) b) are built from
/// root and torus generators, acted on by Gamma, and pulled back through ad.
FixedPointBasis lie_via_dual_numbers(const GaloisSetup& setup, int d);

/// Per-degree comparison of lie_via_dual_numbers with fixed_point_basis.
Report dual_numbers_check(const GaloisSetup& setup, int d);

/// Group-level suite: Gamma-action formula and signs for every root, action
/// order and relations, orbit witnesses for simple-root orbits and closure of
/// the fixed subgroup.
Report verify_group_level(const GaloisSetup& setup, std::uint64_t seed, int trials);

}  // namespace kmloop
