#include "kmloop/laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace kmloop {

LaurentPoly::LaurentPoly(const Scalar& c, int denom) : denom_(denom) {
  if (denom < 1) throw std::invalid_argument("Laurent denominator must be positive");
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int k, int denom) {
  LaurentPoly p(Scalar(0), denom);
  if (!c.is_zero()) p.terms_.emplace_back(k, c);
  return p;
}

bool LaurentPoly::in_base_ring() const {
  return std::all_of(terms_.begin(), terms_.end(), [this](const Term& t) { return t.first % denom_ == 0; });
}

bool LaurentPoly::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_rational(); });
}

Scalar LaurentPoly::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, int key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return Scalar(0);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

LaurentPoly LaurentPoly::with_denom(int denom) const {
  if (denom == denom_) return *this;
  if (is_constant()) {
    LaurentPoly p = *this;
    p.denom_ = denom;
    return p;
  }
  if (denom % denom_ != 0) throw SetupMismatch("cannot re-express t^(k/" + std::to_string(denom_) + ") over 1/" + std::to_string(denom));
  int scale = denom / denom_;
  LaurentPoly p = *this;
  p.denom_ = denom;
  for (auto& t : p.terms_) t.first *= scale;
  return p;
}

int LaurentPoly::common_denom(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.denom_ == b.denom_) return a.denom_;
  if (a.is_constant()) return b.denom_;
  if (b.is_constant()) return a.denom_;
  throw SetupMismatch("Laurent polynomials over t^(1/" + std::to_string(a.denom_) + ") and t^(1/" + std::to_string(b.denom_) +
                      ") cannot be combined");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) {
    denom_ = common_denom(*this, o);
    return *this;
  }
  denom_ = common_denom(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!c.is_zero()) out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(Scalar(0), LaurentPoly::common_denom(a, b));
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& mono = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& other = a.terms_.size() == 1 ? b : a;
    const auto& [k, c] = mono.terms_[0];
    out.terms_.reserve(other.terms_.size());
    for (const auto& [m, d] : other.terms_) out.terms_.emplace_back(k + m, c * d);
    return out;
  }
  std::map<int, Scalar> acc;
  for (const auto& [k, c] : a.terms_) {
    for (const auto& [m, d] : b.terms_) acc[k + m] += c * d;
  }
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(k, c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
  if (!b.is_constant() || b.is_zero()) throw std::domain_error("Laurent division only by nonzero constants");
  return a * b.terms_[0].second.inverse();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.denom_ == b.denom_ || a.is_constant() || b.is_constant()) return a.terms_ == b.terms_;
  int l = std::lcm(a.denom_, b.denom_);
  return a.with_denom(l).terms_ == b.with_denom(l).terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*t^(" + std::to_string(k) + "/" + std::to_string(denom_) + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace kmloop
