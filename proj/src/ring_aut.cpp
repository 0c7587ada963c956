#include "kmloop/ring_aut.hpp"

#include <algorithm>

#include "kmloop/linalg.hpp"

namespace kmloop {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Scalar root_of_unity_power(int r, int e) {
  switch (r) {
    case 1:
      return Scalar(1);
    case 2:
      return mod(e, 2) == 0 ? Scalar(1) : Scalar(-1);
    case 3:
      return xi_power(e);
    default:
      throw std::invalid_argument("unsupported ramification index r = " + std::to_string(r));
  }
}

}  // namespace

RingAut::RingAut(int r, int j, bool s, std::string name) : r_(r), j_(mod(j, r)), s_(s), name_(std::move(name)) {
  if (r < 1 || r > 3) throw std::invalid_argument("ramification index must be 1, 2 or 3");
}

RingAut RingAut::identity(int r) { return {r, 0, false, "id"}; }
RingAut RingAut::sigma_prime(int r) { return {r, r == 1 ? 0 : 1, false, r == 1 ? "id" : "sigma'"}; }
RingAut RingAut::omega_prime(int r) { return {r, 0, true, "omega'"}; }

RingAut RingAut::compose(const RingAut& inner) const {
  if (inner.r_ != r_) throw SetupMismatch("composing ring automorphisms of different setups");
  int inner_j = (s_ && r_ == 3) ? -inner.j_ : inner.j_;
  std::string name = (inner.name_ == "id") ? name_ : (name_ == "id" ? inner.name_ : name_ + "*" + inner.name_);
  return {r_, j_ + inner_j, s_ != inner.s_, name};
}

RingAut RingAut::inverse() const {
  RingAut g = *this;
  RingAut inv = identity(r_);
  for (int i = 1; i < order(); ++i) inv = inv.compose(g);
  inv.name_ = name_ + "^-1";
  return inv;
}

int RingAut::order() const {
  RingAut p = *this;
  int n = 1;
  while (!(p == identity(r_))) {
    p = p.compose(*this);
    ++n;
  }
  return n;
}

Scalar RingAut::monomial_factor(int k) const { return root_of_unity_power(r_, j_ * k); }

LaurentPoly RingAut::apply(const LaurentPoly& p) const {
  if (p.denom() != r_ && !p.is_constant()) {
    throw SetupMismatch("ring automorphism over t^(1/" + std::to_string(r_) + ") applied to a polynomial over t^(1/" +
                        std::to_string(p.denom()) + ")");
  }
  LaurentPoly out(Scalar(0), r_);
  for (const auto& [k, c] : p.terms()) out += LaurentPoly::monomial(apply(c) * monomial_factor(k), k, r_);
  return out;
}

LaurentPoly apply_ring_aut(const RingAut& g, const LaurentPoly& p) { return g.apply(p); }

bool is_galois_fixed(const LaurentPoly& p, const std::vector<RingAut>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const RingAut& g) { return g.apply(p) == p; });
}

std::string to_string(GaloisCase c) {
  switch (c) {
    case GaloisCase::I:
      return "I";
    case GaloisCase::II:
      return "II";
    case GaloisCase::IIIa:
      return "IIIa";
    case GaloisCase::IIIb:
      return "IIIb";
  }
  return "?";
}

GaloisCase galois_case_from_string(const std::string& s) {
  if (s == "I") return GaloisCase::I;
  if (s == "II") return GaloisCase::II;
  if (s == "IIIa") return GaloisCase::IIIa;
  if (s == "IIIb") return GaloisCase::IIIb;
  throw std::invalid_argument("unknown Galois case '" + s + "'");
}

GaloisRing GaloisRing::make(GaloisCase c) {
  GaloisRing g;
  g.galois_case = c;
  switch (c) {
    case GaloisCase::I:
      g.r = 1;
      break;
    case GaloisCase::II:
      g.r = 2;
      g.gens = {RingAut::sigma_prime(2)};
      break;
    case GaloisCase::IIIa:
      g.r = 3;
      g.coefficients = Field::Cyc3;
      g.base = Field::Cyc3;
      g.gens = {RingAut::sigma_prime(3)};
      break;
    case GaloisCase::IIIb:
      g.r = 3;
      g.coefficients = Field::Cyc3;
      g.gens = {RingAut::sigma_prime(3), RingAut::omega_prime(3)};
      break;
  }
  return g;
}

std::vector<Scalar> GaloisRing::coefficient_basis() const {
  if (coefficients == base) return {Scalar(1)};
  return {Scalar(1), Scalar::xi()};
}

std::vector<LaurentPoly> fixed_subring_basis(const GaloisRing& ring, int d) {
  if (d < 0) throw std::invalid_argument("degree window must be nonnegative");
  const std::vector<Scalar> cb = ring.coefficient_basis();
  const auto n = static_cast<Eigen::Index>(cb.size());
  std::vector<LaurentPoly> out;
  for (int k = -d * ring.r; k <= d * ring.r; ++k) {
    // Columns: images (g - 1)(c * t^k) in base-field coordinates, one block per generator.
    ExactMatrix<Scalar> sys = ExactMatrix<Scalar>::Zero(n * static_cast<Eigen::Index>(ring.gens.size()), n);
    for (Eigen::Index col = 0; col < n; ++col) {
      for (std::size_t gi = 0; gi < ring.gens.size(); ++gi) {
        const RingAut& g = ring.gens[gi];
        Scalar moved = g.apply(cb[col]) * g.monomial_factor(k) - cb[col];
        ExactVector<Scalar> coords = base_coordinates(moved, ring.coefficients, ring.base);
        for (Eigen::Index row = 0; row < n; ++row) sys(static_cast<Eigen::Index>(gi) * n + row, col) = coords(row);
      }
    }
    ExactMatrix<Scalar> ker = kernel(sys);
    for (Eigen::Index j = 0; j < ker.cols(); ++j) {
      Scalar c(0);
      for (Eigen::Index i = 0; i < n; ++i) c += ker(i, j) * cb[i];
      out.push_back(LaurentPoly::monomial(c, k, ring.r));
    }
  }
  return out;
}

}  // namespace kmloop
