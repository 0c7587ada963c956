#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmloop/scalar.hpp"

namespace kmloop {

/// Raised when two objects built for different Galois setups are combined.
class SetupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite sum of c_k * t^(k/r) with Scalar coefficients.
///
/// Exponents are stored as integers k in units of 1/r. Terms are kept sorted by
/// k with no zero coefficient. A constant (support in {0}) is compatible with
/// every denominator; any other mix of denominators throws SetupMismatch.
class LaurentPoly {
 public:
  using Term = std::pair<int, Scalar>;

  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Scalar& c, int denom = 1);    // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Scalar& c, int k, int denom);
  /// t^(k/denom)
  static LaurentPoly t(int k, int denom) { return monomial(Scalar(1), k, denom); }

  int denom() const { return denom_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Every exponent is an integral power of t, i.e. the value lies in R.
  bool in_base_ring() const;
  /// Every coefficient is rational.
  bool has_rational_coefficients() const;
  Scalar coeff(int k) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Same value expressed with denominator `denom`, which must be a multiple
  /// of the current one (or anything, for constants).
  LaurentPoly with_denom(int denom) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Scalar& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
  friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }
  /// Division is only defined by nonzero constants.
  friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b);

  /// Values compare equal regardless of the denominator used for a constant.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical rendering: terms by increasing k, each `c*t^(k/r)`, joined
  /// with " + "; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  static int common_denom(const LaurentPoly& a, const LaurentPoly& b);

  int denom_ = 1;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace kmloop
