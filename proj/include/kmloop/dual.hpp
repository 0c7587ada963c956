#pragma once

#include <iosfwd>
#include <string>

#include "kmloop/laurent.hpp"

namespace kmloop {

/// a + eps*b with eps^2 = 0, over Laurent polynomials.
class DualNumber {
 public:
  DualNumber() = default;
  DualNumber(int c) : re_(c) {}                   // NOLINT(google-explicit-constructor)
  DualNumber(LaurentPoly re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  DualNumber(LaurentPoly re, LaurentPoly eps) : re_(std::move(re)), eps_(std::move(eps)) {}

  /// eps * b
  static DualNumber infinitesimal(LaurentPoly b) { return {LaurentPoly(), std::move(b)}; }

  const LaurentPoly& real_part() const { return re_; }
  const LaurentPoly& eps_part() const { return eps_; }
  bool is_zero() const { return re_.is_zero() && eps_.is_zero(); }

  DualNumber operator-() const { return {-re_, -eps_}; }
  DualNumber& operator+=(const DualNumber& o) {
    re_ += o.re_;
    eps_ += o.eps_;
    return *this;
  }
  DualNumber& operator-=(const DualNumber& o) {
    re_ -= o.re_;
    eps_ -= o.eps_;
    return *this;
  }
  DualNumber& operator*=(const DualNumber& o) {
    // (a + eps b)(c + eps d) = ac + eps (ad + bc)
    LaurentPoly eps = re_ * o.eps_ + eps_ * o.re_;
    re_ *= o.re_;
    eps_ = std::move(eps);
    return *this;
  }

  friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
  /// Division only by nonzero rational/cyclotomic constants.
  friend DualNumber operator/(const DualNumber& a, const DualNumber& b) {
    if (!b.eps_.is_zero()) throw std::domain_error("dual division only by constants");
    return {a.re_ / b.re_, a.eps_ / b.re_};
  }
  friend bool operator==(const DualNumber& a, const DualNumber& b) { return a.re_ == b.re_ && a.eps_ == b.eps_; }

  std::string to_string() const { return "[" + re_.to_string() + "] + eps*[" + eps_.to_string() + "]"; }

 private:
  LaurentPoly re_;
  LaurentPoly eps_;
};

std::ostream& operator<<(std::ostream& os, const DualNumber& x);

}  // namespace kmloop
