#include <gtest/gtest.h>

#include "kmloop/dual.hpp"
#include "kmloop/linalg.hpp"
#include "kmloop/ring_aut.hpp"
#include "test_support.hpp"

namespace kmloop {
namespace {

TEST(Rational, LowestTermsPositiveDenominator) {
  Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowIsReported) {
  Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * Rational(4), OverflowError);
}

TEST(Scalar, XiSatisfiesMinimalPolynomial) {
  Scalar x = Scalar::xi();
  EXPECT_EQ(x * x, Scalar(-1) - x);
  EXPECT_EQ(x * x * x, Scalar(1));
  EXPECT_EQ(x + x * x, Scalar(-1));
  EXPECT_EQ(x.conj(), x * x);
  EXPECT_EQ(xi_power(-1), x * x);
}

TEST(Scalar, FieldTagFollowsValue) {
  EXPECT_EQ(Scalar(3).field(), Field::Rat);
  EXPECT_EQ(Scalar::xi().field(), Field::Cyc3);
  EXPECT_EQ((Scalar::xi() + Scalar::xi().conj() + Scalar(1)).field(), Field::Rat);
}

TEST(Scalar, InverseRandomized) {
  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    Scalar s = gen.scalar(true);
    if (s.is_zero()) continue;
    EXPECT_EQ(s * s.inverse(), Scalar(1));
  }
}

TEST(LaurentPoly, CanonicalRendering) {
  LaurentPoly p = LaurentPoly::monomial(Scalar(Rational(3, 2)), 1, 2) + LaurentPoly::monomial(Scalar(-1), -2, 2) +
                  LaurentPoly::monomial(Scalar(Rational(1), Rational(-2)), 0, 2);
  EXPECT_EQ(p.to_string(), "-1*t^(-2/2) + (1-2*x)*t^(0/2) + 3/2*t^(1/2)");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, RingAxiomsRandomized) {
  testing::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    bool cyc = i % 2 == 0;
    int r = 1 + i % 3;
    LaurentPoly a = gen.poly(r, cyc), b = gen.poly(r, cyc), c = gen.poly(r, cyc);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPoly, MixedDenominatorsRejected) {
  LaurentPoly a = LaurentPoly::t(1, 2);
  LaurentPoly b = LaurentPoly::t(1, 3);
  EXPECT_THROW(a + b, SetupMismatch);
  // Constants are compatible with every denominator.
  EXPECT_EQ((a + LaurentPoly(3)).denom(), 2);
  EXPECT_EQ(LaurentPoly::t(2, 2), LaurentPoly::t(1, 1));
}

TEST(RingAut, SigmaPrimeNegatesSquareRoot) {
  RingAut s = RingAut::sigma_prime(2);
  EXPECT_EQ(s.apply(LaurentPoly::t(1, 2)), -LaurentPoly::t(1, 2));
  EXPECT_EQ(s.apply(LaurentPoly::t(2, 2)), LaurentPoly::t(2, 2));
  EXPECT_EQ(s.order(), 2);
}

TEST(RingAut, OmegaPrimeConjugatesXi) {
  RingAut w = RingAut::omega_prime(3);
  LaurentPoly p = LaurentPoly::monomial(Scalar::xi(), 1, 3);
  EXPECT_EQ(w.apply(p), LaurentPoly::monomial(Scalar::xi() * Scalar::xi(), 1, 3));
  EXPECT_EQ(w.order(), 2);
  EXPECT_EQ(RingAut::sigma_prime(3).order(), 3);
}

TEST(RingAut, SetupMismatchIsAnError) {
  EXPECT_THROW(RingAut::sigma_prime(2).apply(LaurentPoly::t(1, 3)), SetupMismatch);
}

TEST(RingAut, S3RelationsOnGenerators) {
  RingAut s = RingAut::sigma_prime(3);
  RingAut w = RingAut::omega_prime(3);
  EXPECT_EQ(w.compose(s).compose(w), s.inverse());
  EXPECT_EQ(w.compose(s).order(), 2);
}

TEST(RingAut, PowersReturnToIdentityOnMonomials) {
  std::vector<RingAut> auts = {RingAut::sigma_prime(2), RingAut::sigma_prime(3), RingAut::omega_prime(3),
                               RingAut::omega_prime(3).compose(RingAut::sigma_prime(3))};
  for (const RingAut& g : auts) {
    for (int k = -6; k <= 6; ++k) {
      for (const Scalar& c : {Scalar(1), Scalar::xi()}) {
        LaurentPoly m = LaurentPoly::monomial(c, k, g.denom());
        LaurentPoly p = m;
        for (int i = 0; i < g.order(); ++i) p = g.apply(p);
        EXPECT_EQ(p, m) << g.name() << " k=" << k;
      }
    }
  }
}

TEST(RingAut, MultiplicativeAndAdditive) {
  testing::Gen gen(3);
  RingAut g = RingAut::omega_prime(3).compose(RingAut::sigma_prime(3));
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = gen.poly(3, true), b = gen.poly(3, true);
    EXPECT_EQ(g.apply(a * b), g.apply(a) * g.apply(b));
    EXPECT_EQ(g.apply(a + b), g.apply(a) + g.apply(b));
  }
}

TEST(GaloisFixed, Examples) {
  auto ii = GaloisRing::make(GaloisCase::II);
  EXPECT_TRUE(is_galois_fixed(LaurentPoly::t(2, 2) + LaurentPoly(3), ii.gens));
  EXPECT_FALSE(is_galois_fixed(LaurentPoly::t(1, 2), ii.gens));
  auto iiib = GaloisRing::make(GaloisCase::IIIb);
  Scalar x = Scalar::xi();
  EXPECT_TRUE(is_galois_fixed(LaurentPoly(x + x * x, 3), iiib.gens));
}

TEST(GaloisFixed, FixedSetIsBaseRing) {
  for (GaloisCase c : {GaloisCase::II, GaloisCase::IIIa, GaloisCase::IIIb}) {
    auto ring = GaloisRing::make(c);
    for (int k = -7; k <= 7; ++k) {
      if (k % ring.r == 0) continue;
      for (const Scalar& coef : {Scalar(1), Scalar::xi(), Scalar(2) + Scalar::xi()}) {
        if (ring.coefficients == Field::Rat && !coef.is_rational()) continue;
        EXPECT_FALSE(is_galois_fixed(LaurentPoly::monomial(coef, k, ring.r), ring.gens));
      }
    }
  }
}

// Brute-force oracle: enumerate small combinations (a + b xi) t^(k/3) and
// keep the fixed ones.
TEST(FixedSubring, CaseIIIbMatchesBruteForce) {
  auto ring = GaloisRing::make(GaloisCase::IIIb);
  std::vector<int> fixed_degrees;
  for (int k = -3; k <= 3; ++k) {
    bool any = false;
    for (int a = -2; a <= 2; ++a) {
      for (int b = -2; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        LaurentPoly p = LaurentPoly::monomial(Scalar(Rational(a), Rational(b)), k, 3);
        if (is_galois_fixed(p, ring.gens)) {
          EXPECT_EQ(b, 0);
          any = true;
        }
      }
    }
    if (any) fixed_degrees.push_back(k);
  }
  EXPECT_EQ(fixed_degrees, (std::vector<int>{-3, 0, 3}));

  auto basis = fixed_subring_basis(ring, 1);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[0], LaurentPoly::t(-3, 3));
  EXPECT_EQ(basis[1], LaurentPoly(1, 3));
  EXPECT_EQ(basis[2], LaurentPoly::t(3, 3));
  for (const auto& p : basis) EXPECT_TRUE(p.has_rational_coefficients());
}

TEST(FixedSubring, OtherCases) {
  auto ii = fixed_subring_basis(GaloisRing::make(GaloisCase::II), 1);
  ASSERT_EQ(ii.size(), 3u);
  EXPECT_EQ(ii[0], LaurentPoly::t(-1, 1));
  EXPECT_EQ(ii[2], LaurentPoly::t(1, 1));
  auto i = fixed_subring_basis(GaloisRing::make(GaloisCase::I), 0);
  ASSERT_EQ(i.size(), 1u);
  EXPECT_EQ(i[0], LaurentPoly(1));
  EXPECT_EQ(fixed_subring_basis(GaloisRing::make(GaloisCase::IIIa), 2).size(), 5u);
}

TEST(DualNumber, LeibnizRuleRandomized) {
  testing::Gen gen(5);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = gen.poly(2, false), b = gen.poly(2, false), c = gen.poly(2, false), d = gen.poly(2, false);
    DualNumber p = DualNumber(a, b) * DualNumber(c, d);
    EXPECT_EQ(p.real_part(), a * c);
    EXPECT_EQ(p.eps_part(), a * d + b * c);
  }
  DualNumber e = DualNumber::infinitesimal(LaurentPoly(1));
  EXPECT_TRUE((e * e).is_zero());
}

TEST(LinAlg, KernelOverCyclotomicField) {
  ExactMatrix<Scalar> m(1, 2);
  m(0, 0) = Scalar::xi();
  m(0, 1) = Scalar(1);
  ExactMatrix<Scalar> k = kernel(m);
  ASSERT_EQ(k.cols(), 1);
  EXPECT_TRUE(is_zero(Scalar(m(0, 0) * k(0, 0) + m(0, 1) * k(1, 0))));
  EXPECT_EQ(determinant(to_exact<Scalar>((Eigen::MatrixXi(2, 2) << 2, -1, -1, 2).finished())), Scalar(3));
}

}  // namespace
}  // namespace kmloop
