#include <gtest/gtest.h>

#include <random>

#include "kmloop/loopgroup.hpp"
#include "test_support.hpp"

namespace kmloop {
namespace {

GaloisSetup setup_for(const std::string& name, std::optional<GaloisCase> c = std::nullopt) {
  return GaloisSetup::make(parse_affine_type(name), c);
}

LaurentPoly poly(std::initializer_list<std::pair<int, int>> terms, int r) {
  LaurentPoly p;
  for (auto [c, k] : terms) p += LaurentPoly::monomial(Scalar(c), k, r);
  return p;
}

// Leibniz expansion, independent of any elimination.
LaurentPoly det3(const ExactMatrix<LaurentPoly>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

TEST(RootGenerator, ZeroParameterIsIdentity) {
  for (const char* t : {"A2", "B2", "G2"}) {
    ChevalleyBasis cb{RootSystem(FiniteType::parse(t))};
    for (int a = 0; a < cb.roots().size(); ++a) EXPECT_TRUE(root_generator(cb, a, LaurentPoly()).is_identity()) << t;
  }
}

TEST(RootGenerator, A1PositiveRootIsUnipotentUpperTriangular) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("A1"))};
  LaurentPoly u = poly({{2, 1}, {-1, -1}}, 1);
  auto g = root_generator(cb, 0, u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(g.matrix(i, i), LaurentPoly(1));
    for (int j = 0; j < i; ++j) EXPECT_TRUE(g.matrix(i, j).is_zero());
  }
  // Basis (e, h, f): x(u) f = f + u h - u^2 e.
  EXPECT_EQ(g.matrix(0, 2), -(u * u));
}

TEST(RootGenerator, AdditiveInParameter) {
  for (const char* t : {"A2", "B2", "G2", "A3"}) {
    ChevalleyBasis cb{RootSystem(FiniteType::parse(t))};
    LaurentPoly u = poly({{1, 1}, {3, 0}}, 1), v = poly({{-2, -1}}, 1);
    for (int a = 0; a < cb.roots().size(); ++a)
      EXPECT_TRUE(root_generator(cb, a, u) * root_generator(cb, a, v) == root_generator(cb, a, u + v)) << t << " " << a;
  }
}

TEST(RootGenerator, CommuteWhenSumIsNotARoot) {
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    ChevalleyBasis cb{RootSystem(FiniteType::parse(t))};
    const RootSystem& rs = cb.roots();
    LaurentPoly u = poly({{1, 1}}, 1), v = poly({{2, 0}, {1, -1}}, 1);
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        Root s = rs.root(a) + rs.root(b);
        if (s.isZero() || rs.contains(s)) continue;
        auto xa = root_generator(cb, a, u);
        auto xb = root_generator(cb, b, v);
        EXPECT_TRUE(xa * xb == xb * xa) << t << " " << a << " " << b;
      }
  }
}

TEST(RootGenerator, SimplyLacedCommutatorFormula) {
  // x_a(u) x_b(v) x_a(-u) x_b(-v) = x_{a+b}(N_ab u v) when a + b is a root and
  // no other positive combination is.
  for (const char* t : {"A2", "A3", "D4"}) {
    ChevalleyBasis cb{RootSystem(FiniteType::parse(t))};
    const RootSystem& rs = cb.roots();
    LaurentPoly u = poly({{1, 1}, {1, 0}}, 1), v = poly({{-3, 0}}, 1);
    int checked = 0;
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        auto s = rs.index_of(rs.root(a) + rs.root(b));
        if (!s) continue;
        auto c = root_generator(cb, a, u) * root_generator(cb, b, v) * root_generator(cb, a, LaurentPoly(-u)) *
                 root_generator(cb, b, LaurentPoly(-v));
        EXPECT_TRUE(c == root_generator(cb, *s, LaurentPoly(cb.structure_constant(a, b)) * u * v)) << t;
        ++checked;
      }
    EXPECT_GT(checked, 0);
  }
}

TEST(RootGenerator, A1DeterminantOneAndInverse) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("A1"))};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3), k(-2, 2), root(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    LoopGroupElement g = LoopGroupElement::identity(3);
    for (int i = 0; i < 4; ++i) g = g * root_generator(cb, root(rng), poly({{c(rng), k(rng)}}, 1));
    EXPECT_EQ(det3(g.matrix), LaurentPoly(1));
    EXPECT_TRUE((g * g.inverse()).is_identity());
  }
}

TEST(RootGenerator, ActsByLieAutomorphisms) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("G2"))};
  const int d = cb.dimension();
  LoopGroupElement g = root_generator(cb, 0, poly({{1, 1}}, 1)) * root_generator(cb, 7, poly({{2, -1}}, 1)) *
                       root_generator(cb, 5, poly({{-1, 0}}, 1));
  for (int a = 0; a < d; a += 3)
    for (int b = 1; b < d; b += 4) {
      auto x = cb.basis_vector<LaurentPoly>(a), y = cb.basis_vector<LaurentPoly>(b);
      LoopElement lhs = g.matrix * cb.bracket(x, y);
      LoopElement gx = g.matrix * x, gy = g.matrix * y;
      EXPECT_TRUE(exactly_equal(lhs, cb.bracket(gx, gy)));
    }
}

TEST(RootGenerator, ParameterRecoverableFromMatrix) {
  // The adjoint representation is faithful on every root subgroup, so checks
  // made on x_alpha(u) are not blind to the center.
  ChevalleyBasis cb{RootSystem(FiniteType::parse("B3"))};
  LaurentPoly u = poly({{5, 2}, {-1, -3}}, 1);
  for (int a = 0; a < cb.roots().size(); ++a) {
    auto g = root_generator(cb, a, u);
    const int row = cb.e(a);
    bool found = false;
    for (int i = 0; i < cb.rank() && !found; ++i) {
      const int n = cb.ad(row)(row, cb.h(i));
      if (n == 0) continue;
      EXPECT_EQ(g.matrix(row, cb.h(i)), u * LaurentPoly(n));
      found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(g.is_identity());
  }
}

TEST(GammaAction, MatchesLieLevelSigns) {
  for (const char* t : {"A2^(2)", "A3^(2)", "D4^(2)", "E6^(2)", "D4^(3)"}) {
    GaloisSetup s = setup_for(t);
    const ChevalleyBasis& cb = s.basis();
    for (int a = 0; a < cb.roots().size(); ++a)
      EXPECT_EQ(extract_sign(s, a), s.sigma.root_sign(cb, a)) << t << " " << cb.label(cb.e(a));
  }
}

TEST(GammaAction, SignExamples) {
  GaloisSetup a2 = setup_for("A2^(2)");
  const RootSystem& rs = a2.basis().roots();
  EXPECT_EQ(extract_sign(a2, 0), 1);
  EXPECT_EQ(extract_sign(a2, 1), 1);
  EXPECT_EQ(extract_sign(a2, rs.highest_root()), -1);
  EXPECT_EQ(extract_sign(a2, rs.negative(rs.highest_root())), -1);
  GaloisSetup e8 = setup_for("E8^(1)");
  EXPECT_EQ(extract_sign(e8, e8.basis().roots().highest_root()), 1);
}

TEST(GammaAction, SignOfOppositeRootsMultiplyToOne) {
  for (const char* t : {"A4^(2)", "D5^(2)", "D4^(3)"}) {
    GaloisSetup s = setup_for(t);
    const RootSystem& rs = s.basis().roots();
    for (int a = 0; a < rs.num_positive(); ++a) EXPECT_EQ(extract_sign(s, a) * extract_sign(s, rs.negative(a)), 1) << t;
  }
}

TEST(GammaAction, Homomorphism) {
  GaloisSetup s = setup_for("D4^(3)");
  const ChevalleyBasis& cb = s.basis();
  LoopGroupElement g = root_generator(cb, 3, LaurentPoly::t(1, 3)) * root_generator(cb, 15, poly({{2, -2}}, 3));
  LoopGroupElement h = root_generator(cb, 20, poly({{1, 4}, {1, 0}}, 3));
  for (const auto& gen : s.gens) {
    EXPECT_TRUE(gamma_act(gen, g * h) == gamma_act(gen, g) * gamma_act(gen, h));
    EXPECT_TRUE(gamma_act(gen, g.inverse()) == gamma_act(gen, g).inverse());
  }
}

TEST(GammaAction, GroupSuitePasses) {
  for (const char* t : {"A2^(2)", "A3^(2)", "D4^(2)", "D4^(3)"}) {
    Report rep = verify_group_level(setup_for(t), 1, 30);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << t << " " << c.name << " " << c.instance << " " << c.witness;
  }
  Report iiia = verify_group_level(setup_for("D4^(3)", GaloisCase::IIIa), 2, 30);
  EXPECT_TRUE(iiia.all_pass());
}

TEST(OrbitElement, A2TwistedNeedsCorrection) {
  GaloisSetup s = setup_for("A2^(2)");
  const ChevalleyBasis& cb = s.basis();
  LaurentPoly u = poly({{1, 1}, {2, -1}}, 2);
  LoopGroupElement naive = root_generator(cb, 0, u) * root_generator(cb, 1, s.gens[0].ring.apply(u));
  EXPECT_FALSE(is_gamma_fixed(s, naive));
  LoopGroupElement g = twisted_orbit_element(s, 0, u);
  EXPECT_TRUE(is_gamma_fixed(s, g));
  EXPECT_FALSE(g.is_identity());
  EXPECT_TRUE(is_gamma_fixed(s, twisted_orbit_element(s, s.basis().roots().negative(1), u)));
}

TEST(OrbitElement, D4TrialityBothCases) {
  for (GaloisCase c : {GaloisCase::IIIa, GaloisCase::IIIb}) {
    GaloisSetup s = setup_for("D4^(3)", c);
    const RootSystem& rs = s.basis().roots();
    LaurentPoly u = LaurentPoly::monomial(Scalar(Rational(1), Rational(2)), 1, 3) + LaurentPoly::t(-2, 3) + LaurentPoly::t(3, 3);
    for (int a : {0, 1, 2, 3, rs.negative(0), rs.negative(1)}) {
      LoopGroupElement g = twisted_orbit_element(s, a, u);
      EXPECT_TRUE(is_gamma_fixed(s, g)) << to_string(c) << " " << a;
      EXPECT_FALSE(g.is_identity());
    }
  }
}

TEST(OrbitElement, UntwistedIsRootGenerator) {
  GaloisSetup s = setup_for("B3^(1)");
  LaurentPoly u = poly({{1, 1}}, 1);
  EXPECT_TRUE(twisted_orbit_element(s, 2, u) == root_generator(s.basis(), 2, u));
}

TEST(OrbitElement, FixedElementsFormASubgroup) {
  GaloisSetup s = setup_for("A2^(2)");
  std::vector<LoopGroupElement> fixed;
  for (int a : {0, 3}) fixed.push_back(twisted_orbit_element(s, a, poly({{1, 1}}, 2)));
  fixed.push_back(twisted_orbit_element(s, 1, poly({{-2, 0}, {1, -3}}, 2)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
  for (int t = 0; t < 200; ++t) {
    LoopGroupElement g = fixed[pick(rng)] * fixed[pick(rng)].inverse() * fixed[pick(rng)];
    ASSERT_TRUE(is_gamma_fixed(s, g)) << t;
  }
}

TEST(DualNumbers, KernelIsAdditive) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("A2"))};
  auto x = root_generator(cb, 0, DualNumber::infinitesimal(LaurentPoly::t(1, 1)));
  auto y = infinitesimal_torus(cb, 1, LaurentPoly(3));
  auto xy = x * y;
  ExactMatrix<LaurentPoly> expect = cb.ad_matrix(LoopElement(cb.basis_vector<LaurentPoly>(cb.e(0)) * LaurentPoly::t(1, 1) +
                                                            cb.basis_vector<LaurentPoly>(cb.h(1)) * LaurentPoly(3)));
  for (int i = 0; i < cb.dimension(); ++i)
    for (int j = 0; j < cb.dimension(); ++j) {
      EXPECT_EQ(xy.matrix(i, j).real_part(), LaurentPoly(i == j ? 1 : 0));
      EXPECT_EQ(xy.matrix(i, j).eps_part(), expect(i, j));
    }
}

TEST(DualNumbers, FixedCountsMatchLieLevel) {
  std::vector<std::pair<const char*, std::optional<GaloisCase>>> cases = {
      {"A1^(1)", std::nullopt}, {"A2^(2)", std::nullopt}, {"D4^(2)", std::nullopt},
      {"D4^(3)", GaloisCase::IIIa}, {"D4^(3)", GaloisCase::IIIb}};
  for (const auto& [t, c] : cases) {
    GaloisSetup s = setup_for(t, c);
    EXPECT_EQ(lie_via_dual_numbers(s, 1).counts(), fixed_point_basis(s, 1).counts()) << t;
    EXPECT_TRUE(dual_numbers_check(s, 1).all_pass()) << t;
  }
}

TEST(RootGenerator, RandomizedAdditivity) {
  testing::Gen gen(17);
  ChevalleyBasis cb{RootSystem(FiniteType::parse("C3"))};
  for (int trial = 0; trial < 100; ++trial) {
    const int a = gen.uniform(0, cb.roots().size() - 1);
    LaurentPoly u = gen.poly(1, false, 2, 2), v = gen.poly(1, false, 2, 2);
    ASSERT_TRUE(root_generator(cb, a, u) * root_generator(cb, a, v) == root_generator(cb, a, u + v)) << trial;
  }
}

TEST(GammaAction, OmegaHasNoSign) {
  GaloisSetup s = setup_for("D4^(3)");
  const ChevalleyBasis& cb = s.basis();
  const GammaGenerator& omega = s.gens.at(1);
  ASSERT_EQ(omega.name, "omega");
  const LaurentPoly x(Scalar(Rational(0), Rational(1)));
  for (int a = 0; a < cb.roots().size(); ++a) {
    const int target = cb.root_of(omega.lie.image[static_cast<std::size_t>(cb.e(a))]);
    EXPECT_TRUE(gamma_act(omega, root_generator(cb, a, x)) == root_generator(cb, target, LaurentPoly(x * x)))
        << cb.label(cb.e(a));
  }
}

TEST(GammaAction, FixednessExamples) {
  GaloisSetup s = setup_for("A3^(2)");
  const ChevalleyBasis& cb = s.basis();
  EXPECT_TRUE(is_gamma_fixed(s, LoopGroupElement::identity(cb.dimension())));
  LaurentPoly u = poly({{1, 1}, {1, -2}}, 2);
  EXPECT_FALSE(is_gamma_fixed(s, root_generator(cb, 0, u)));
  // alpha_1 and alpha_3 are orthogonal, so the plain orbit product is fixed.
  const GammaGenerator& sigma = s.gens[0];
  LoopGroupElement g = root_generator(cb, 0, u) * root_generator(cb, 2, LaurentPoly(extract_sign(s, 0)) * sigma.ring.apply(u));
  EXPECT_TRUE(is_gamma_fixed(s, g));
  EXPECT_TRUE(twisted_orbit_element(s, 0, u) == g);
}

TEST(DualNumbers, RootGeneratorTruncates) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("B2"))};
  LaurentPoly u = poly({{2, 1}, {-1, 0}}, 1);
  for (int a = 0; a < cb.roots().size(); ++a) {
    auto g = root_generator(cb, a, DualNumber::infinitesimal(u));
    Eigen::MatrixXi ad = cb.ad(cb.e(a));
    for (int i = 0; i < cb.dimension(); ++i)
      for (int j = 0; j < cb.dimension(); ++j) {
        EXPECT_EQ(g.matrix(i, j).real_part(), LaurentPoly(i == j ? 1 : 0));
        EXPECT_EQ(g.matrix(i, j).eps_part(), u * LaurentPoly(ad(i, j)));
      }
  }
}

TEST(RootGenerator, JsonRendering) {
  ChevalleyBasis cb{RootSystem(FiniteType::parse("A1"))};
  auto j = to_json(root_generator(cb, 0, LaurentPoly::t(1, 1)));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0][1], LaurentPoly::monomial(Scalar(-2), 1, 1).to_string());
  EXPECT_EQ(j[2][2], LaurentPoly(1).to_string());
  EXPECT_EQ(j[2][0], LaurentPoly().to_string());
}

}  // namespace
}  // namespace kmloop
