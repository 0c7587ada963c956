#pragma once

// Shared random generators for the property-style tests.

#include <cstdint>
#include <random>

#include "kmloop/laurent.hpp"

namespace kmloop::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational rational(int span = 5) {
    int den = uniform(1, 4);
    return {uniform(-span, span), den};
  }

  Scalar scalar(bool cyclotomic) {
    if (!cyclotomic) return Scalar(rational());
    return {rational(), rational()};
  }

  /// Random polynomial over t^(1/r) with exponents in [-span, span].
  LaurentPoly poly(int r, bool cyclotomic, int max_terms = 3, int span = 4) {
    LaurentPoly p(Scalar(0), r);
    int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(scalar(cyclotomic), uniform(-span, span), r);
    return p;
  }

  LaurentPoly nonzero_poly(int r, bool cyclotomic, int max_terms = 3, int span = 4) {
    for (;;) {
      LaurentPoly p = poly(r, cyclotomic, max_terms, span);
      if (!p.is_zero()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace kmloop::testing
