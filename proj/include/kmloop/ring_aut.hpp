#pragma once

#include <string>
#include <vector>

#include "kmloop/laurent.hpp"

namespace kmloop {

/// Ring automorphism of K[t^(+-1/r)] fixing K[t^(+-1)].
///
/// Acts on a monomial by  c * t^(k/r)  ->  conj^s(c) * zeta^(j*k) * t^(k/r),
/// where zeta is the primitive r-th root of unity (-1 for r = 2, xi for
/// r = 3) and conj is xi -> xi^2. Every such map fixes R pointwise.
class RingAut {
 public:
  static RingAut identity(int r);
  /// t^(1/r) -> zeta * t^(1/r).
  static RingAut sigma_prime(int r);
  /// xi -> xi^2, fixing t^(1/r).
  static RingAut omega_prime(int r);

  int denom() const { return r_; }
  int root_exponent() const { return j_; }
  bool conjugates() const { return s_; }
  const std::string& name() const { return name_; }

  /// (*this) after `inner`.
  RingAut compose(const RingAut& inner) const;
  RingAut inverse() const;
  int order() const;

  LaurentPoly apply(const LaurentPoly& p) const;
  Scalar apply(const Scalar& c) const { return s_ ? c.conj() : c; }
  /// Multiplier applied to t^(k/r) (coefficient-free part).
  Scalar monomial_factor(int k) const;

  friend bool operator==(const RingAut& a, const RingAut& b) { return a.r_ == b.r_ && a.j_ == b.j_ && a.s_ == b.s_; }

 private:
  RingAut(int r, int j, bool s, std::string name);

  int r_ = 1;
  int j_ = 0;
  bool s_ = false;
  std::string name_;
};

/// Free function form: g(p).
LaurentPoly apply_ring_aut(const RingAut& g, const LaurentPoly& p);

/// True iff every generator fixes p.
bool is_galois_fixed(const LaurentPoly& p, const std::vector<RingAut>& gens);

/// The four Galois extensions S / R over Q.
enum class GaloisCase { I, II, IIIa, IIIb };

std::string to_string(GaloisCase c);
GaloisCase galois_case_from_string(const std::string& s);

/// Ring-level data of a Galois extension S = K[t^(+-1/r)] of R = F[t^(+-1)].
struct GaloisRing {
  GaloisCase galois_case = GaloisCase::I;
  int r = 1;
  /// Field of coefficients of S.
  Field coefficients = Field::Rat;
  /// Field over which fixed points are counted (Q, or Q(xi) in case IIIa).
  Field base = Field::Rat;
  std::vector<RingAut> gens;

  static GaloisRing make(GaloisCase c);
  /// Basis of the coefficient field over the base field: {1} or {1, xi}.
  std::vector<Scalar> coefficient_basis() const;
};

/// Basis over the base field of the fixed subring S^Gamma, restricted to
/// exponents k in [-d*r, d*r]. Computed by solving the fixed-point system
/// monomial by monomial.
std::vector<LaurentPoly> fixed_subring_basis(const GaloisRing& ring, int d);

}  // namespace kmloop
