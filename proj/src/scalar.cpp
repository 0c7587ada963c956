#include "kmloop/scalar.hpp"

#include <ostream>

namespace kmloop {

Scalar& Scalar::operator*=(const Scalar& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2,  x^2 = -1 - x
  Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = a;
  b_ = b;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (b_.is_zero()) return Scalar(a_.inverse());
  Rational n = norm();
  Scalar c = conj();
  return {c.a() / n, c.b() / n};
}

std::string Scalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out = "(" + a_.to_string();
  if (b_.sign() < 0) {
    out += "-" + (-b_).to_string();
  } else {
    out += "+" + b_.to_string();
  }
  return out + "*x)";
}

Scalar xi_power(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return Scalar(1);
    case 1:
      return Scalar::xi();
    default:
      return {Rational(-1), Rational(-1)};
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace kmloop
