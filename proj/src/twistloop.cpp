#include "kmloop/twistloop.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "kmloop/linalg.hpp"

namespace kmloop {
namespace {

GaloisCase default_case(int r) {
  switch (r) {
    case 1:
      return GaloisCase::I;
    case 2:
      return GaloisCase::II;
    default:
      return GaloisCase::IIIb;
  }
}

// First involution tau with tau sigma tau = sigma^-1.
DiagramAutomorphism reflecting_involution(const FiniteType& t, const DiagramAutomorphism& sigma) {
  DiagramAutomorphism inv = sigma.compose(sigma);
  for (const auto& tau : diagram_automorphisms(t, 2))
    if (tau.compose(sigma).compose(tau) == inv) return tau;
  throw TypeError("no involution inverts the order-3 diagram automorphism of " + t.name());
}

std::string describe(const ChevalleyBasis& cb, const LoopElement& x) {
  std::string s = render(cb, x);
  return s.size() > 160 ? s.substr(0, 157) + "..." : s;
}

Scalar normalizer(const Scalar& c, bool split) {
  if (!split) return c;
  return Scalar(c.a().is_zero() ? c.b() : c.a());
}

// Element of the fixed space in degree k killed by ad of every element in
// `killers` (given by their constant g-parts); unique up to scale.
LieElement<Scalar> extremal_vector(const GaloisSetup& s, int k, const std::vector<LieElement<Scalar>>& killers) {
  const ChevalleyBasis& cb = s.basis();
  ExactMatrix<Scalar> v = fixed_space(s, k);
  const bool split = s.ring.coefficients != s.ring.base;
  const int d = cb.dimension();
  const int block = split ? 2 * d : d;
  ExactMatrix<Scalar> sys = ExactMatrix<Scalar>::Zero(block * static_cast<int>(killers.size()), v.cols());
  for (Eigen::Index m = 0; m < v.cols(); ++m) {
    LieElement<Scalar> col = v.col(m);
    for (std::size_t i = 0; i < killers.size(); ++i) {
      LieElement<Scalar> img = cb.bracket(killers[i], col);
      const int off = block * static_cast<int>(i);
      for (int b = 0; b < d; ++b) {
        if (split) {
          sys(off + b, m) = Scalar(img(b).a());
          sys(off + d + b, m) = Scalar(img(b).b());
        } else {
          sys(off + b, m) = img(b);
        }
      }
    }
  }
  ExactMatrix<Scalar> ker = kernel(sys);
  if (ker.cols() != 1)
    throw GeneratorError("extremal vector in degree " + std::to_string(k) + " is not unique (" + std::to_string(ker.cols()) +
                         " solutions)");
  LieElement<Scalar> x = v * ker.col(0);
  for (int b = 0; b < d; ++b) {
    if (!x(b).is_zero()) {
      Scalar c = normalizer(x(b), split);
      for (int j = 0; j < d; ++j) x(j) = x(j) / c;
      break;
    }
  }
  return x;
}

LoopElement scaled(const LoopElement& x, const Scalar& c) {
  LoopElement out = x;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) *= c;
  return out;
}

}  // namespace

GaloisSetup GaloisSetup::make(const AffineType& type, std::optional<GaloisCase> c) {
  GaloisCase gc = c.value_or(default_case(type.r));
  const int need = gc == GaloisCase::I ? 1 : gc == GaloisCase::II ? 2 : 3;
  if (need != type.r)
    throw SetupMismatch("case " + to_string(gc) + " needs r = " + std::to_string(need) + ", got " + type.name());
  GaloisSetup s;
  s.type = type;
  s.ring = GaloisRing::make(gc);
  s.cb = std::make_shared<const ChevalleyBasis>(RootSystem(type.finite));
  DiagramAutomorphism d = type.r == 1 ? DiagramAutomorphism::identity(type.finite.rank)
                                      : diagram_automorphisms(type.finite, type.r).at(0);
  s.sigma = lift_automorphism(*s.cb, d);
  for (const RingAut& g : s.ring.gens) {
    if (g.conjugates()) {
      s.gens.push_back({"omega", g, lift_automorphism(*s.cb, reflecting_involution(type.finite, d))});
    } else {
      s.gens.push_back({"sigma", g, s.sigma});
    }
  }
  return s;
}

LoopElement gamma_apply(const GammaGenerator& g, const LoopElement& x) {
  LoopElement y(x.size());
  for (Eigen::Index b = 0; b < x.size(); ++b) y(b) = g.ring.apply(x(b));
  return g.lie.apply(y);
}

bool is_gamma_fixed(const GaloisSetup& setup, const LoopElement& x) {
  for (const auto& g : setup.gens)
    if (!exactly_equal(gamma_apply(g, x), x)) return false;
  return true;
}

std::vector<int> Eigenspaces::dims() const {
  std::vector<int> out;
  for (const auto& s : spaces) out.push_back(static_cast<int>(s.cols()));
  return out;
}

Eigenspaces eigenspace_decomposition(const ChevalleyBasis& cb, const LieAutomorphism& sigma, Field field) {
  const int r = sigma.order;
  if (r == 3 && field == Field::Rat) throw FieldError("eigenvalues of an order-3 automorphism need xi in the field");
  Eigenspaces out;
  out.r = r;
  ExactMatrix<Scalar> m = to_exact<Scalar>(sigma.matrix);
  for (int j = 0; j < r; ++j) {
    Scalar lambda = r == 2 ? Scalar(j == 0 ? 1 : -1) : xi_power(j);
    ExactMatrix<Scalar> shifted = m;
    for (int i = 0; i < cb.dimension(); ++i) shifted(i, i) -= lambda;
    out.spaces.push_back(kernel(shifted));
  }
  return out;
}

ExactMatrix<Scalar> fixed_space(const GaloisSetup& setup, int k) {
  const int d = setup.dim();
  const bool split = setup.ring.coefficients != setup.ring.base;
  const int n = split ? 2 * d : d;
  const auto ng = static_cast<int>(setup.gens.size());
  ExactMatrix<Scalar> sys = ExactMatrix<Scalar>::Zero(n * ng, n);
  for (int gi = 0; gi < ng; ++gi) {
    const GammaGenerator& g = setup.gens[static_cast<std::size_t>(gi)];
    const Scalar c = g.ring.monomial_factor(k);
    const int off = gi * n;
    for (int b = 0; b < d; ++b) {
      const int img = g.lie.image[static_cast<std::size_t>(b)];
      const Scalar sg(g.lie.sign[static_cast<std::size_t>(b)]);
      if (!split) {
        sys(off + img, b) += sg * c;
        continue;
      }
      // x_b = a + b*xi in coordinates (a at b, b at d + b).
      const Scalar p(c.a()), q(c.b());
      Scalar aa, ab, ba, bb;
      if (g.ring.conjugates()) {
        aa = p, ab = q - p, ba = q, bb = -p;
      } else {
        aa = p, ab = -q, ba = q, bb = p - q;
      }
      sys(off + img, b) += sg * aa;
      sys(off + img, d + b) += sg * ab;
      sys(off + d + img, b) += sg * ba;
      sys(off + d + img, d + b) += sg * bb;
    }
    for (int i = 0; i < n; ++i) sys(off + i, i) -= Scalar(1);
  }
  ExactMatrix<Scalar> ker = kernel(sys);
  if (!split) return ker;
  ExactMatrix<Scalar> out(d, ker.cols());
  for (Eigen::Index m = 0; m < ker.cols(); ++m)
    for (int b = 0; b < d; ++b) out(b, m) = Scalar(ker(b, m).a(), ker(d + b, m).a());
  return out;
}

LieElement<Scalar> degree_part(const LoopElement& x, int k) {
  LieElement<Scalar> v(x.size());
  int r = 1;
  for (Eigen::Index b = 0; b < x.size(); ++b)
    if (!x(b).is_constant()) r = x(b).denom();
  for (Eigen::Index b = 0; b < x.size(); ++b) v(b) = x(b).with_denom(r).coeff(k);
  return v;
}

LoopElement with_degree(const LieElement<Scalar>& v, int k, int r) {
  LoopElement x(v.size());
  for (Eigen::Index b = 0; b < v.size(); ++b) x(b) = LaurentPoly::monomial(v(b), k, r);
  return x;
}

std::map<int, int> FixedPointBasis::counts() const {
  std::map<int, int> out;
  for (int k = -window * r; k <= window * r; ++k) out[k] = 0;
  for (int k : degree) ++out[k];
  return out;
}

std::vector<LoopElement> FixedPointBasis::at_degree(int k) const {
  std::vector<LoopElement> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (degree[i] == k) out.push_back(elements[i]);
  return out;
}

FixedPointBasis fixed_point_basis(const GaloisSetup& setup, int d) {
  FixedPointBasis out;
  out.window = d;
  out.r = setup.r();
  for (int k = -d * out.r; k <= d * out.r; ++k) {
    ExactMatrix<Scalar> v = fixed_space(setup, k);
    for (Eigen::Index m = 0; m < v.cols(); ++m) {
      out.degree.push_back(k);
      out.elements.push_back(with_degree(v.col(m), k, out.r));
    }
  }
  return out;
}

AffineGenerators affine_generators(const GaloisSetup& setup) {
  const ChevalleyBasis& cb = setup.basis();
  const RootSystem& rs = cb.roots();
  const int n = rs.rank();
  const int r = setup.r();
  const int dim = cb.dimension();
  AffineGenerators g;

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = setup.sigma.diagram.perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
    }
    std::sort(orbit.begin(), orbit.end());
    g.orbits.push_back(orbit);
  }

  LieElement<Scalar> e0, f0;
  std::vector<LieElement<Scalar>> es, fs;
  for (const auto& orbit : g.orbits) {
    LieElement<Scalar> e = LieElement<Scalar>::Zero(dim), f = LieElement<Scalar>::Zero(dim);
    int mu = 0;
    for (int j : orbit) {
      e(cb.e(j)) = Scalar(1);
      f(cb.e(rs.negative(j))) = Scalar(1);
      mu += rs.cartan()(j, orbit[0]);
    }
    f *= Scalar(Rational(2, mu));
    es.push_back(e);
    fs.push_back(f);
  }
  if (r == 1) {
    const int theta = rs.highest_root();
    e0 = cb.basis_vector<Scalar>(cb.e(rs.negative(theta)));
    f0 = cb.basis_vector<Scalar>(cb.e(theta));
  } else {
    e0 = extremal_vector(setup, 1, fs);
    f0 = extremal_vector(setup, -1, es);
    LieElement<Scalar> h0 = cb.bracket(e0, f0);
    LieElement<Scalar> he = cb.bracket(h0, e0);
    Eigen::Index b = 0;
    while (e0(b).is_zero()) ++b;
    Scalar mu = he(b) / e0(b);
    if (!exactly_equal(he, LieElement<Scalar>(e0 * mu)) || mu.is_zero())
      throw GeneratorError("[H_0, E_0] is not a nonzero multiple of E_0");
    f0 *= Scalar(2) / mu;
  }
  g.E.push_back(with_degree(e0, 1, r));
  g.F.push_back(with_degree(f0, -1, r));
  for (std::size_t i = 0; i < es.size(); ++i) {
    g.E.push_back(with_degree(es[i], 0, r));
    g.F.push_back(with_degree(fs[i], 0, r));
  }
  for (int i = 0; i < g.size(); ++i) g.H.push_back(cb.bracket(g.E[static_cast<std::size_t>(i)], g.F[static_cast<std::size_t>(i)]));
  return g;
}

std::optional<Scalar> proportionality(const LoopElement& y, const LoopElement& x) {
  Eigen::Index b = 0;
  while (b < x.size() && x(b).is_zero()) ++b;
  if (b == x.size()) return std::nullopt;
  const auto& [k, c] = x(b).terms().front();
  Scalar lambda = y(b).with_denom(x(b).denom()).coeff(k) / c;
  LoopElement lx = scaled(x, lambda);
  if (!exactly_equal(lx, y)) return std::nullopt;
  return lambda;
}

Eigen::MatrixXi affine_gcm_from_generators(const ChevalleyBasis& cb, const AffineGenerators& g) {
  const int n = g.size();
  Eigen::MatrixXi a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LoopElement he = cb.bracket(g.H[static_cast<std::size_t>(i)], g.E[static_cast<std::size_t>(j)]);
      auto lambda = proportionality(he, g.E[static_cast<std::size_t>(j)]);
      if (!lambda || !lambda->is_rational() || !lambda->a().is_integer())
        throw GeneratorError("[H_" + std::to_string(i) + ", E_" + std::to_string(j) + "] is not an integer multiple of E_" +
                             std::to_string(j));
      a(i, j) = static_cast<int>(lambda->a().num());
    }
  }
  return a;
}

bool is_affine_gcm(const Eigen::MatrixXi& a) {
  const auto n = static_cast<int>(a.rows());
  if (n != a.cols() || n < 2) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j ? a(i, j) != 2 : a(i, j) > 0) return false;
      if ((a(i, j) == 0) != (a(j, i) == 0)) return false;
    }
  if (!is_zero(determinant(to_exact<Scalar>(a)))) return false;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const auto m = static_cast<int>(idx.size());
    Eigen::MatrixXi sub(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) sub(i, j) = a(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    Scalar det = determinant(to_exact<Scalar>(sub));
    if (!(det.a() > Rational(0))) return false;
  }
  return true;
}

Eigen::VectorXi dual_kac_labels(const Eigen::MatrixXi& a) {
  ExactMatrix<Scalar> ker = kernel(ExactMatrix<Scalar>(to_exact<Scalar>(a).transpose()));
  if (ker.cols() != 1) throw GeneratorError("GCM does not have corank 1");
  std::int64_t l = 1;
  for (Eigen::Index i = 0; i < ker.rows(); ++i) l = std::lcm(l, ker(i, 0).a().den());
  Eigen::VectorXi c(ker.rows());
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < ker.rows(); ++i) {
    Rational v = ker(i, 0).a() * Rational(l);
    c(i) = static_cast<int>(v.num());
    g = std::gcd(g, v.num());
  }
  c /= static_cast<int>(g);
  if (c.sum() < 0) c = -c;
  return c;
}

Report verify_serre(const ChevalleyBasis& cb, const AffineGenerators& g, const Eigen::MatrixXi& a) {
  Report rep;
  const int n = g.size();
  auto at = [](const std::vector<LoopElement>& v, int i) -> const LoopElement& { return v[static_cast<std::size_t>(i)]; };
  auto ij = [](int i, int j) { return "i=" + std::to_string(i) + ",j=" + std::to_string(j); };
  auto expect = [&](const char* name, int i, int j, const LoopElement& got, const LoopElement& want) {
    LoopElement diff = got - want;
    bool ok = all_zero(diff);
    rep.add(name, ij(i, j), ok, ok ? std::string() : describe(cb, diff));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LoopElement zero = LoopElement::Constant(at(g.E, 0).size(), LaurentPoly());
      if (i < j) expect("[H_i,H_j]=0", i, j, cb.bracket(at(g.H, i), at(g.H, j)), zero);
      expect("[E_i,F_j]=delta_ij H_i", i, j, cb.bracket(at(g.E, i), at(g.F, j)), i == j ? at(g.H, i) : zero);
      expect("[H_i,E_j]=a_ij E_j", i, j, cb.bracket(at(g.H, i), at(g.E, j)), scaled(at(g.E, j), Scalar(a(i, j))));
      expect("[H_i,F_j]=-a_ij F_j", i, j, cb.bracket(at(g.H, i), at(g.F, j)), scaled(at(g.F, j), Scalar(-a(i, j))));
      if (i == j) continue;
      LoopElement xe = at(g.E, j), xf = at(g.F, j);
      for (int p = 0; p < 1 - a(i, j); ++p) {
        xe = cb.bracket(at(g.E, i), xe);
        xf = cb.bracket(at(g.F, i), xf);
      }
      expect("(ad E_i)^(1-a_ij) E_j=0", i, j, xe, zero);
      expect("(ad F_i)^(1-a_ij) F_j=0", i, j, xf, zero);
    }
  }
  return rep;
}

Report verify_lie_level(const GaloisSetup& setup, int d) {
  const ChevalleyBasis& cb = setup.basis();
  Report rep;
  rep.type = setup.type.name();
  rep.galois_case = to_string(setup.galois_case());
  rep.r = setup.r();
  rep.window = d;

  AffineGenerators g = affine_generators(setup);
  for (int i = 0; i < g.size(); ++i) {
    auto idx = static_cast<std::size_t>(i);
    std::string inst = "i=" + std::to_string(i);
    rep.add("gamma-fixed E_i", inst, is_gamma_fixed(setup, g.E[idx]));
    rep.add("gamma-fixed F_i", inst, is_gamma_fixed(setup, g.F[idx]));
    rep.add("gamma-fixed H_i", inst, is_gamma_fixed(setup, g.H[idx]));
  }

  Eigen::MatrixXi a = affine_gcm_from_generators(cb, g);
  std::ostringstream gcm;
  gcm << a.format(Eigen::IOFormat(Eigen::StreamPrecision, Eigen::DontAlignCols, ",", ",", "[", "]", "[", "]"));
  rep.add("gcm-affine", "corank 1, proper minors positive", is_affine_gcm(a), gcm.str());
  rep.add("gcm-symmetrizable", "", symmetrizer(a).has_value());
  bool type_ok = gcm_isomorphic(a, reference_affine_gcm(setup.type));
  rep.add("gcm-type", setup.type.name(), type_ok, type_ok ? std::string() : identify_affine_type(a).value_or("unknown"));
  if (setup.r() == 1) {
    bool ext = a == extended_cartan_matrix(cb.roots());
    rep.add("gcm-extended-cartan", "lowest-root extension", ext, ext ? std::string() : gcm.str());
  }
  rep.append(verify_serre(cb, g, a));

  Eigen::VectorXi c = dual_kac_labels(a);
  LoopElement central = LoopElement::Constant(cb.dimension(), LaurentPoly());
  for (int i = 0; i < g.size(); ++i) central += scaled(g.H[static_cast<std::size_t>(i)], Scalar(c(i)));
  std::ostringstream labels;
  labels << c.transpose();
  rep.add("central relation sum a_i^vee H_i=0", labels.str(), all_zero(central), all_zero(central) ? "" : describe(cb, central));

  Field f = setup.r() == 3 ? Field::Cyc3 : Field::Rat;
  std::vector<int> dims = eigenspace_decomposition(cb, setup.sigma, f).dims();
  FixedPointBasis fb = fixed_point_basis(setup, d);
  std::map<int, int> counts = fb.counts();
  const int r = setup.r();
  for (const auto& [k, cnt] : counts) {
    int j = ((-k) % r + r) % r;
    int want = dims[static_cast<std::size_t>(j)];
    rep.add("fixed-count", "k=" + std::to_string(k), cnt == want,
            cnt == want ? "" : std::to_string(cnt) + " != dim g_" + std::to_string(j) + " = " + std::to_string(want));
  }
  for (int start = -d * r; start + r - 1 <= d * r; start += r) {
    int total = 0;
    for (int k = start; k < start + r; ++k) total += counts[k];
    rep.add("free-rank block", "k=" + std::to_string(start) + ".." + std::to_string(start + r - 1), total == cb.dimension(),
            total == cb.dimension() ? "" : std::to_string(total));
  }
  int unfixed = 0;
  for (const auto& x : fb.elements) unfixed += !is_gamma_fixed(setup, x);
  rep.add("fixed-basis gamma-fixed", std::to_string(fb.elements.size()) + " elements", unfixed == 0,
          unfixed == 0 ? "" : std::to_string(unfixed) + " moved");
  return rep;
}

Report base_change_check(int d, std::uint64_t seed, int trials) {
  AffineType t = lookup_affine_type(FiniteType::make(Letter::D, 4), 3);
  GaloisSetup sb = GaloisSetup::make(t, GaloisCase::IIIb);
  GaloisSetup sa = GaloisSetup::make(t, GaloisCase::IIIa);
  const ChevalleyBasis& cb = sb.basis();
  const GammaGenerator& sigma = sa.gens.at(0);
  Report rep;
  rep.type = t.name();
  rep.galois_case = "IIIb/IIIa";
  rep.r = 3;
  rep.window = d;
  std::mt19937_64 rng(seed);
  auto coef = [&] { return static_cast<int>(rng() % 7) - 3; };
  const Scalar x = Scalar::xi();
  const std::vector<std::pair<Scalar, int>> monos = {{Scalar(1), 0}, {x, 0}, {Scalar(1), 1}, {x, 1}, {Scalar(1), 2}, {x, 2}};

  for (int k = -3 * d; k <= 3 * d; ++k) {
    ExactMatrix<Scalar> vb = fixed_space(sb, k);
    ExactMatrix<Scalar> va = fixed_space(sa, k);
    auto rk = rank(vb);
    bool ok = rk == va.cols() && vb.cols() == va.cols();
    rep.add("base-change rank", "k=" + std::to_string(k), ok,
            ok ? "" : "Q-dim " + std::to_string(vb.cols()) + ", Q(xi)-rank " + std::to_string(rk) + ", sigma-fixed " + std::to_string(va.cols()));

    auto random_fixed = [&] {
      LieElement<Scalar> v = LieElement<Scalar>::Zero(cb.dimension());
      for (Eigen::Index m = 0; m < vb.cols(); ++m) v += vb.col(m) * Scalar(coef());
      return v;
    };
    // x = sum x_i m_i with x_i in degree k of the S_3-fixed algebra.
    auto build = [&](const std::vector<LieElement<Scalar>>& parts) {
      LoopElement out = LoopElement::Constant(cb.dimension(), LaurentPoly(Scalar(0), 3));
      for (std::size_t i = 0; i < parts.size(); ++i) out += with_degree(parts[i] * monos[i].first, k + monos[i].second, 3);
      return out;
    };
    LoopElement control = build({random_fixed(), random_fixed()});
    bool control_ok = exactly_equal(gamma_apply(sigma, control), control);
    rep.add("x1 + x2 xi is sigma-fixed", "k=" + std::to_string(k), control_ok);

    int moved = 0;
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<LieElement<Scalar>> parts;
      bool tail = false;
      do {
        parts.clear();
        for (int i = 0; i < 6; ++i) parts.push_back(random_fixed());
        tail = false;
        for (int i = 2; i < 6; ++i) tail = tail || !all_zero(parts[static_cast<std::size_t>(i)]);
      } while (!tail);
      LoopElement xv = build(parts);
      moved += !exactly_equal(gamma_apply(sigma, xv), xv);
    }
    rep.add("nonzero x3..x6 breaks sigma-fixedness", "k=" + std::to_string(k), moved == trials,
            moved == trials ? "" : std::to_string(trials - moved) + " fixed");
  }
  return rep;
}

std::string render(const ChevalleyBasis& cb, const LoopElement& x, int r) {
  std::string out;
  for (Eigen::Index b = 0; b < x.size(); ++b) {
    if (x(b).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + (r > 0 ? x(b).with_denom(r) : x(b)).to_string() + ")*" + cb.label(static_cast<int>(b));
  }
  return out.empty() ? "0" : out;
}

}  // namespace kmloop
