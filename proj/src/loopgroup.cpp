#include "kmloop/loopgroup.hpp"

#include <random>
#include <sstream>

#include "kmloop/linalg.hpp"

namespace kmloop {
namespace {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

const GammaGenerator* find_gen(const GaloisSetup& setup, const std::string& name) {
  for (const auto& g : setup.gens)
    if (g.name == name) return &g;
  return nullptr;
}

int image_root(const ChevalleyBasis& cb, const GammaGenerator& gen, int root) {
  return cb.root_of(gen.lie.image[static_cast<std::size_t>(cb.e(root))]);
}

// Sign k with gen(x_alpha(u)) = x_{gen alpha}(k gen'(u)) for both test values.
std::optional<int> action_sign(const ChevalleyBasis& cb, const GammaGenerator& gen, int root) {
  const int r = gen.ring.denom();
  const LaurentPoly us[] = {LaurentPoly(1) + LaurentPoly::monomial(Scalar(2), 1, r),
                            LaurentPoly::monomial(Scalar(-3), -1, r) + LaurentPoly::t(2, r)};
  const int target = image_root(cb, gen, root);
  std::optional<int> found;
  for (const auto& u : us) {
    LoopGroupElement lhs = gamma_act(gen, root_generator(cb, root, u));
    std::optional<int> here;
    for (int k : {1, -1}) {
      if (lhs == root_generator(cb, target, LaurentPoly(k) * gen.ring.apply(u))) {
        here = k;
        break;
      }
    }
    if (!here || (found && *found != *here)) return std::nullopt;
    found = here;
  }
  return found;
}

int checked_sign(const ChevalleyBasis& cb, const GammaGenerator& gen, int root) {
  auto k = action_sign(cb, gen, root);
  if (!k) throw LiftError("no sign k with " + gen.name + "(x_alpha(u)) = x_{" + gen.name + " alpha}(k u') for " + cb.label(cb.e(root)));
  return *k;
}

LoopGroupElement sigma_orbit_product(const GaloisSetup& setup, const GammaGenerator& sigma, int root, const LaurentPoly& u) {
  const ChevalleyBasis& cb = setup.basis();
  LoopGroupElement g = LoopGroupElement::identity(cb.dimension());
  int a = root;
  LaurentPoly v = u;
  for (int j = 0; j < setup.r(); ++j) {
    g = g * root_generator(cb, a, v);
    v = LaurentPoly(checked_sign(cb, sigma, a)) * sigma.ring.apply(v);
    a = image_root(cb, sigma, a);
  }
  return g;
}

// c with c - k sigma'(c) = w, solved monomial by monomial.
LaurentPoly solve_twisted(const GammaGenerator& sigma, int k, const LaurentPoly& w) {
  const int r = sigma.ring.denom();
  LaurentPoly c;
  const LaurentPoly wr = w.with_denom(r);
  for (const auto& [m, wm] : wr.terms()) {
    Scalar factor = Scalar(1) - Scalar(k) * sigma.ring.monomial_factor(m);
    if (factor.is_zero()) throw UnsupportedOrbit("correction equation has no solution at t^(" + std::to_string(m) + "/" + std::to_string(r) + ")");
    c += LaurentPoly::monomial(wm / factor, m, r);
  }
  return c;
}

// w with h = x_beta(w), read off from the e_beta coefficient of h(h_i).
std::optional<LaurentPoly> root_parameter(const ChevalleyBasis& cb, int beta, const LoopGroupElement& h) {
  const int row = cb.e(beta);
  const Eigen::MatrixXi ad = cb.ad(row);
  for (int i = 0; i < cb.rank(); ++i) {
    const int n = ad(row, cb.h(i));
    if (n == 0) continue;
    LaurentPoly w = h.matrix(row, cb.h(i)) / LaurentPoly(n);
    if (root_generator(cb, beta, w) == h) return w;
    return std::nullopt;
  }
  return std::nullopt;
}

LaurentPoly random_poly(std::mt19937_64& rng, const GaloisSetup& setup) {
  const int r = setup.r();
  std::uniform_int_distribution<int> nterms(1, 2), expo(-r, r), coef(-3, 3);
  const bool cyc = setup.ring.coefficients == Field::Cyc3;
  LaurentPoly p;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    int a = coef(rng);
    int b = cyc ? coef(rng) : 0;
    if (a == 0 && b == 0) a = 1;
    p += LaurentPoly::monomial(Scalar(Rational(a), Rational(b)), expo(rng), r);
  }
  return p.is_zero() ? LaurentPoly::t(1, r) : p;
}

std::string root_name(const ChevalleyBasis& cb, int root) { return cb.label(cb.e(root)); }

}  // namespace

std::vector<IntMatrix> divided_powers(const ChevalleyBasis& cb, int root) {
  const int d = cb.dimension();
  const IntMatrix ad = cb.ad(cb.e(root)).cast<std::int64_t>();
  std::vector<IntMatrix> out{IntMatrix::Identity(d, d)};
  const int cap = 2 * cb.roots().max_height() + 1;
  for (int k = 1; k <= cap; ++k) {
    IntMatrix next = out.back() * ad;
    if (next.isZero()) return out;
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index i = 0; i < d; ++i) {
        if (next(i, j) % k != 0) throw LiftError("(ad e_alpha)^k / k! is not integral");
        next(i, j) /= k;
      }
    out.push_back(std::move(next));
  }
  throw LiftError("ad e_alpha is not nilpotent within the height bound");
}

DualGroupElement infinitesimal_torus(const ChevalleyBasis& cb, int i, const LaurentPoly& u) {
  const int d = cb.dimension();
  const Eigen::MatrixXi ad = cb.ad(cb.h(i));
  DualGroupElement g = DualGroupElement::identity(d);
  for (int b = 0; b < d; ++b) {
    if (ad(b, b) == 0) continue;
    LaurentPoly n(ad(b, b));
    g.matrix(b, b) = DualNumber(LaurentPoly(1), n * u);
    g.inverse_matrix(b, b) = DualNumber(LaurentPoly(1), -(n * u));
  }
  return g;
}

nlohmann::ordered_json to_json(const LoopGroupElement& g) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < g.matrix.cols(); ++j) row.push_back(g.matrix(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentPoly apply_entry(const RingAut& g, const LaurentPoly& x) { return g.apply(x); }

DualNumber apply_entry(const RingAut& g, const DualNumber& x) {
  return {g.apply(x.real_part()), g.apply(x.eps_part())};
}

int extract_sign(const GaloisSetup& setup, int root) {
  const GammaGenerator* sigma = find_gen(setup, "sigma");
  if (!sigma) return 1;
  return checked_sign(setup.basis(), *sigma, root);
}

LoopGroupElement twisted_orbit_element(const GaloisSetup& setup, int root, const LaurentPoly& u) {
  const ChevalleyBasis& cb = setup.basis();
  const RootSystem& rs = cb.roots();
  const GammaGenerator* sigma = find_gen(setup, "sigma");
  if (!sigma) return root_generator(cb, root, u);

  LoopGroupElement g = sigma_orbit_product(setup, *sigma, root, u);
  if (!(gamma_act(*sigma, g) == g)) {
    const int sroot = image_root(cb, *sigma, root);
    const Root sum = rs.root(root) + rs.root(sroot);
    if (setup.r() != 2 || !rs.contains(sum))
      throw UnsupportedOrbit("orbit product of " + root_name(cb, root) + " is not fixed and has no single correction root");
    const int beta = *rs.index_of(sum);
    auto w = root_parameter(cb, beta, g.inverse() * gamma_act(*sigma, g));
    if (!w) throw UnsupportedOrbit("defect of the orbit product of " + root_name(cb, root) + " is not a root element");
    g = g * root_generator(cb, beta, solve_twisted(*sigma, checked_sign(cb, *sigma, beta), *w));
  }
  if (const GammaGenerator* omega = find_gen(setup, "omega"); omega && !(gamma_act(*omega, g) == g)) g = g * gamma_act(*omega, g);
  if (!is_gamma_fixed(setup, g)) throw UnsupportedOrbit("no Gamma-fixed element found on the orbit of " + root_name(cb, root));
  return g;
}

FixedPointBasis lie_via_dual_numbers(const GaloisSetup& setup, int d) {
  const ChevalleyBasis& cb = setup.basis();
  const RootSystem& rs = cb.roots();
  const int dim = cb.dimension();
  const int r = setup.r();
  const auto coeffs = setup.ring.coefficient_basis();
  const auto nc = static_cast<int>(coeffs.size());
  const bool split = nc == 2;
  const int n = dim * nc;

  std::vector<Eigen::MatrixXi> ads;
  for (int b = 0; b < dim; ++b) ads.push_back(cb.ad(b));
  // Cartan coordinates of Y from the diagonal of ad Y on e_1..e_N.
  ExactMatrix<Scalar> cartan_sys(cb.rank(), cb.rank());
  for (int i = 0; i < cb.rank(); ++i)
    for (int j = 0; j < cb.rank(); ++j) cartan_sys(i, j) = Scalar(ads[static_cast<std::size_t>(cb.h(j))](cb.e(i), cb.e(i)));

  auto kernel_element = [&](int b, const LaurentPoly& u) {
    if (cb.is_cartan(b)) return infinitesimal_torus(cb, b - cb.h(0), u);
    return root_generator(cb, cb.root_of(b), DualNumber::infinitesimal(u));
  };

  // Y with ad Y = X, where X is homogeneous of degree k.
  auto pull_back = [&](const ExactMatrix<DualNumber>& m, int k) {
    ExactMatrix<Scalar> x(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int i = 0; i < dim; ++i) {
        const DualNumber& e = m(i, j);
        if (!(e.real_part() == LaurentPoly(i == j ? 1 : 0)))
          throw LiftError("kernel element does not reduce to the identity mod eps");
        LaurentPoly p = e.eps_part().with_denom(r);
        if (!(p == LaurentPoly::monomial(p.coeff(k), k, r))) throw LiftError("eps-part is not homogeneous");
        x(i, j) = p.coeff(k);
      }
    LieElement<Scalar> y = LieElement<Scalar>::Zero(dim);
    for (int a = 0; a < rs.size(); ++a) {
      const int b = cb.e(a);
      for (int i = 0; i < cb.rank(); ++i) {
        const int nn = ads[static_cast<std::size_t>(b)](b, cb.h(i));
        if (nn == 0) continue;
        y(b) = x(b, cb.h(i)) / Scalar(nn);
        break;
      }
    }
    ExactVector<Scalar> rhs(cb.rank()), hy;
    for (int i = 0; i < cb.rank(); ++i) rhs(i) = x(cb.e(i), cb.e(i));
    if (!solve(cartan_sys, rhs, hy)) throw LiftError("Cartan part of the eps-part is inconsistent");
    for (int i = 0; i < cb.rank(); ++i) y(cb.h(i)) = hy(i);
    ExactMatrix<Scalar> back = ExactMatrix<Scalar>::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
      if (y(b).is_zero()) continue;
      const auto& ad = ads[static_cast<std::size_t>(b)];
      for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
          if (ad(i, j) != 0) back(i, j) += y(b) * Scalar(ad(i, j));
    }
    if (!exactly_equal(back, x)) throw LiftError("eps-part is not in the image of ad");
    return y;
  };

  auto coordinates = [&](const LieElement<Scalar>& y) {
    ExactVector<Scalar> v(n);
    for (int b = 0; b < dim; ++b) {
      if (split) {
        v(b) = Scalar(y(b).a());
        v(dim + b) = Scalar(y(b).b());
      } else {
        v(b) = y(b);
      }
    }
    return v;
  };

  FixedPointBasis out;
  out.window = d;
  out.r = r;
  for (int k = -d * r; k <= d * r; ++k) {
    const auto ng = static_cast<int>(setup.gens.size());
    ExactMatrix<Scalar> sys = ExactMatrix<Scalar>::Zero(std::max(1, ng) * n, n);
    for (int gi = 0; gi < ng; ++gi) {
      const GammaGenerator& gen = setup.gens[static_cast<std::size_t>(gi)];
      for (int ci = 0; ci < nc; ++ci)
        for (int b = 0; b < dim; ++b) {
          DualGroupElement g = kernel_element(b, LaurentPoly::monomial(coeffs[static_cast<std::size_t>(ci)], k, r));
          pull_back(g.matrix, k);
          ExactVector<Scalar> img = coordinates(pull_back(gamma_act(gen, g).matrix, k));
          const int col = ci * dim + b;
          for (int i = 0; i < n; ++i) sys(gi * n + i, col) = img(i);
          sys(gi * n + col, col) -= Scalar(1);
        }
    }
    ExactMatrix<Scalar> ker = kernel(sys);
    for (Eigen::Index m = 0; m < ker.cols(); ++m) {
      LieElement<Scalar> y(dim);
      for (int b = 0; b < dim; ++b) y(b) = split ? Scalar(ker(b, m).a(), ker(dim + b, m).a()) : ker(b, m);
      out.degree.push_back(k);
      out.elements.push_back(with_degree(y, k, r));
    }
  }
  return out;
}

Report dual_numbers_check(const GaloisSetup& setup, int d) {
  Report rep;
  rep.type = setup.type.name();
  rep.galois_case = to_string(setup.galois_case());
  rep.r = setup.r();
  rep.window = d;
  FixedPointBasis dual = lie_via_dual_numbers(setup, d);
  auto lie = fixed_point_basis(setup, d).counts();
  auto got = dual.counts();
  for (const auto& [k, c] : lie) {
    const int g = got[k];
    rep.add("dual-number fixed count", "k=" + std::to_string(k), g == c,
            g == c ? "" : "dual=" + std::to_string(g) + ", lie=" + std::to_string(c));
  }
  for (std::size_t i = 0; i < dual.elements.size(); ++i) {
    const bool ok = is_gamma_fixed(setup, dual.elements[i]);
    rep.add("dual-number element gamma-fixed", "k=" + std::to_string(dual.degree[i]) + ",n=" + std::to_string(i), ok,
            ok ? "" : render(setup.basis(), dual.elements[i], setup.r()));
  }
  return rep;
}

Report verify_group_level(const GaloisSetup& setup, std::uint64_t seed, int trials) {
  const ChevalleyBasis& cb = setup.basis();
  const RootSystem& rs = cb.roots();
  Report rep;
  rep.type = setup.type.name();
  rep.galois_case = to_string(setup.galois_case());
  rep.r = setup.r();

  for (const auto& gen : setup.gens) {
    for (int a = 0; a < rs.size(); ++a) {
      auto k = action_sign(cb, gen, a);
      const int expected = gen.lie.root_sign(cb, a);
      rep.add("gamma-action on x_alpha(u)", gen.name + "," + root_name(cb, a), k.has_value(),
              k ? "" : "no sign fits at two values of u");
      if (!k) continue;
      rep.add("k_alpha matches lift sign", gen.name + "," + root_name(cb, a), *k == expected,
              *k == expected ? "" : "k=" + std::to_string(*k));
      if (a < rs.num_positive()) {
        auto kn = action_sign(cb, gen, rs.negative(a));
        const bool ok = kn && *k * *kn == 1;
        rep.add("k_alpha k_-alpha = 1", gen.name + "," + root_name(cb, a), ok, ok ? "" : "product is not 1");
      }
    }
  }

  std::mt19937_64 rng(seed);
  auto random_element = [&]() {
    std::uniform_int_distribution<int> pick(0, rs.size() - 1);
    LoopGroupElement g = LoopGroupElement::identity(cb.dimension());
    for (int i = 0; i < 3; ++i) g = g * root_generator(cb, pick(rng), random_poly(rng, setup));
    return g;
  };

  const GammaGenerator* sigma = find_gen(setup, "sigma");
  const GammaGenerator* omega = find_gen(setup, "omega");
  for (int t = 0; t < std::min(trials, 20); ++t) {
    LoopGroupElement g = random_element();
    const std::string inst = "trial=" + std::to_string(t);
    for (const auto& gen : setup.gens) {
      LoopGroupElement h = g;
      for (int j = 0; j < gen.ring.order(); ++j) h = gamma_act(gen, h);
      rep.add("gamma-action order", gen.name + "," + inst, h == g);
    }
    if (sigma && omega) {
      LoopGroupElement lhs = gamma_act(*omega, gamma_act(*sigma, gamma_act(*omega, g)));
      LoopGroupElement rhs = gamma_act(*sigma, gamma_act(*sigma, g));
      rep.add("omega sigma omega = sigma^2", inst, lhs == rhs);
    }
    LoopGroupElement g2 = random_element();
    if (sigma) rep.add("gamma-action multiplicative", inst, gamma_act(*sigma, g * g2) == gamma_act(*sigma, g) * gamma_act(*sigma, g2));
  }

  std::vector<int> reps;
  std::vector<bool> seen(static_cast<std::size_t>(rs.rank()), false);
  for (int i = 0; i < rs.rank(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    reps.push_back(i);
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = setup.sigma.diagram.perm[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
  }
  std::vector<LoopGroupElement> fixed;
  for (int i : reps) {
    for (int a : {i, rs.negative(i)}) {
      const std::string inst = root_name(cb, a);
      try {
        // Traces of u can vanish; retry with a fresh parameter.
        LoopGroupElement g = twisted_orbit_element(setup, a, random_poly(rng, setup));
        for (int attempt = 0; attempt < 8 && g.is_identity(); ++attempt) g = twisted_orbit_element(setup, a, random_poly(rng, setup));
        const bool ok = is_gamma_fixed(setup, g) && !g.is_identity();
        rep.add("orbit witness gamma-fixed", inst, ok);
        if (ok) fixed.push_back(g);
      } catch (const UnsupportedOrbit& e) {
        rep.add("orbit witness gamma-fixed", inst, false, e.what());
      }
    }
  }
  if (!fixed.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, fixed.size() - 1);
    std::uniform_int_distribution<int> len(2, 3), inv(0, 1);
    int bad = 0;
    std::string first_bad;
    for (int t = 0; t < trials; ++t) {
      LoopGroupElement g = LoopGroupElement::identity(cb.dimension());
      const int l = len(rng);
      for (int i = 0; i < l; ++i) {
        const LoopGroupElement& f = fixed[pick(rng)];
        g = g * (inv(rng) ? f.inverse() : f);
      }
      if (!is_gamma_fixed(setup, g)) {
        if (bad++ == 0) first_bad = "trial=" + std::to_string(t);
      }
    }
    rep.add("fixed subgroup closed under products", "trials=" + std::to_string(trials), bad == 0,
            bad == 0 ? "" : std::to_string(bad) + " failures, first at " + first_bad);
  }
  return rep;
}

}  // namespace kmloop
