#pragma once

#include <iosfwd>
#include <string>

#include "kmloop/rational.hpp"

namespace kmloop {

/// Which field a Scalar value lives in.
enum class Field { Rat, Cyc3 };

/// Element a + b*xi of Q(xi), xi a primitive cube root of unity.
///
/// xi is symbolic: products are reduced with xi^2 = -1 - xi. The field tag is
/// derived from the value, so Rat always means b == 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int a) : a_(a) {}           // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(a) {}      // NOLINT(google-explicit-constructor)
  Scalar(Rational a, Rational b) : a_(a), b_(b) {}

  static Scalar xi() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Field field() const { return b_.is_zero() ? Field::Rat : Field::Cyc3; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Galois conjugate xi -> xi^2.
  Scalar conj() const { return {a_ - b_, -b_}; }
  /// Field norm a^2 - ab + b^2.
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }
  Scalar inverse() const;

  Scalar operator-() const { return {-a_, -b_}; }
  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Rationals render as "p/q"; cyclotomic values as "(a+b*x)".
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

/// xi^k for any integer k.
Scalar xi_power(int k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace kmloop
