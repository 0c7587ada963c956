#include "kmloop/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "kmloop/linalg.hpp"

namespace kmloop {

namespace {

std::vector<int> key(const Root& r) { return {r.data(), r.data() + r.size()}; }

// Descending lexicographic comparison: alpha_1 = (1,0,...) first.
bool lex_greater(const Root& a, const Root& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) > b(i);
  }
  return false;
}

}  // namespace

char letter_char(Letter l) { return "ABCDEFG"[static_cast<int>(l)]; }

FiniteType FiniteType::make(Letter letter, int rank) {
  FiniteType t{letter, rank, false};
  bool ok = false;
  switch (letter) {
    case Letter::A:
      ok = rank >= 1;
      break;
    case Letter::B:
      ok = rank >= 2;
      if (rank == 2) {
        t.letter = Letter::C;
        t.aliased = true;
      }
      break;
    case Letter::C:
      ok = rank >= 2;
      break;
    case Letter::D:
      ok = rank >= 4;
      break;
    case Letter::E:
      ok = rank >= 6 && rank <= 8;
      break;
    case Letter::F:
      ok = rank == 4;
      break;
    case Letter::G:
      ok = rank == 2;
      break;
  }
  if (!ok) throw TypeError(std::string("no finite root system of type ") + letter_char(letter) + std::to_string(rank));
  return t;
}

FiniteType FiniteType::parse(const std::string& text) {
  if (text.size() < 2) throw TypeError("cannot parse type '" + text + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const std::string digits = text.substr(1);
  if (c < 'A' || c > 'G' || !std::all_of(digits.begin(), digits.end(), [](unsigned char d) { return std::isdigit(d); }) ||
      digits.size() > 3) {
    throw TypeError("cannot parse type '" + text + "'");
  }
  return make(static_cast<Letter>(c - 'A'), std::stoi(digits));
}

std::string FiniteType::name() const { return letter_char(letter) + std::to_string(rank); }

std::string FiniteType::requested_name() const { return aliased ? "B" + std::to_string(rank) : name(); }

Eigen::MatrixXi cartan_matrix(const FiniteType& t) {
  const int n = t.rank;
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  switch (t.letter) {
    case Letter::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Letter::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case Letter::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case Letter::D:
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Letter::E:
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Letter::F:
      link(0, 1);
      link(1, 2, -1, -2);
      link(2, 3);
      break;
    case Letter::G:
      link(0, 1, -3, -1);
      break;
  }
  return a;
}

std::optional<std::vector<int>> symmetrizer(const Eigen::MatrixXi& a) {
  const auto n = static_cast<int>(a.rows());
  // Rational weights propagated along the diagram, then cleared of denominators.
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (!w[static_cast<std::size_t>(start)].is_zero()) continue;
    w[static_cast<std::size_t>(start)] = Rational(1);
    stack.push_back(start);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        if (a(j, i) == 0) return std::nullopt;
        Rational wj = w[static_cast<std::size_t>(i)] * Rational(a(i, j)) / Rational(a(j, i));
        if (w[static_cast<std::size_t>(j)].is_zero()) {
          w[static_cast<std::size_t>(j)] = wj;
          stack.push_back(j);
        } else if (!(w[static_cast<std::size_t>(j)] == wj)) {
          return std::nullopt;
        }
      }
    }
  }
  std::int64_t l = 1;
  for (const auto& q : w) l = std::lcm(l, q.den());
  std::vector<std::int64_t> ints;
  for (const auto& q : w) ints.push_back(q.num() * (l / q.den()));
  std::int64_t g = 0;
  for (auto v : ints) g = std::gcd(g, v);
  std::vector<int> out;
  for (auto v : ints) {
    if (v / g <= 0) return std::nullopt;
    out.push_back(static_cast<int>(v / g));
  }
  return out;
}

RootSystem::RootSystem(const FiniteType& t) : type_(t), cartan_(cartan_matrix(t)) {
  auto s = kmloop::symmetrizer(cartan_);
  if (!s) throw TypeError("Cartan matrix of " + t.name() + " is not symmetrizable");
  sym_ = *s;
  const int n = t.rank;

  // Positive roots by increasing height via root strings: for beta != alpha_i,
  // the alpha_i-string through beta is beta - p alpha_i .. beta + q alpha_i with
  // p - q = <beta, alpha_i^vee>.
  std::vector<Root> positive;
  std::map<std::vector<int>, int> seen;
  for (int i = 0; i < n; ++i) {
    Root r = Root::Zero(n);
    r(i) = 1;
    seen[key(r)] = static_cast<int>(positive.size());
    positive.push_back(r);
  }
  for (std::size_t cur = 0; cur < positive.size(); ++cur) {
    const Root beta = positive[cur];
    for (int i = 0; i < n; ++i) {
      if (beta.sum() == 1 && beta(i) == 1) continue;
      int p = 0;
      Root down = beta;
      for (;;) {
        down(i) -= 1;
        if (!seen.count(key(down))) break;
        ++p;
      }
      int q = p - pairing(beta, i);
      if (q > 0) {
        Root up = beta;
        up(i) += 1;
        if (!seen.count(key(up))) {
          seen[key(up)] = static_cast<int>(positive.size());
          positive.push_back(up);
        }
      }
    }
  }
  std::stable_sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return lex_greater(a, b);
  });
  roots_ = positive;
  for (const Root& r : positive) roots_.push_back(-r);
  for (int i = 0; i < size(); ++i) index_[key(roots_[static_cast<std::size_t>(i)])] = i;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(key(r));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a(i) * b(j) * sym_[static_cast<std::size_t>(i)] * cartan_(i, j);
  }
  return s;
}

int RootSystem::pairing(const Root& beta, int i) const { return (cartan_.row(i) * beta)(0); }

Root RootSystem::reflect(int i, const Root& beta) const {
  Root out = beta;
  out(i) -= pairing(beta, i);
  return out;
}

Eigen::VectorXi RootSystem::coroot(const Root& beta) const {
  // beta^vee = 2 beta / (beta, beta) and alpha_i = d_i alpha_i^vee (up to the common factor).
  const int half_norm = inner(beta, beta) / 2;
  Eigen::VectorXi c(rank());
  for (int i = 0; i < rank(); ++i) {
    const int num = beta(i) * sym_[static_cast<std::size_t>(i)];
    if (num % half_norm != 0) throw std::logic_error("non-integral coroot coordinate");
    c(i) = num / half_norm;
  }
  return c;
}

RootSystem build_root_system(const FiniteType& t) { return RootSystem(t); }

DiagramAutomorphism DiagramAutomorphism::identity(int n) {
  DiagramAutomorphism d;
  d.perm.resize(static_cast<std::size_t>(n));
  std::iota(d.perm.begin(), d.perm.end(), 0);
  return d;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& inner) const {
  DiagramAutomorphism d;
  d.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d.perm[i] = perm[static_cast<std::size_t>(inner.perm[i])];
  DiagramAutomorphism id = identity(static_cast<int>(perm.size()));
  DiagramAutomorphism p = d;
  d.order = 1;
  while (!(p == id)) {
    std::vector<int> next(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) next[i] = d.perm[static_cast<std::size_t>(p.perm[i])];
    p.perm = next;
    ++d.order;
  }
  return d;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const Eigen::MatrixXi& a, int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("automorphism order must be 1, 2 or 3");
  const auto n = static_cast<int>(a.rows());
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      DiagramAutomorphism d;
      d.perm = perm;
      d = d.compose(DiagramAutomorphism::identity(n));
      if (d.order == r) out.push_back(d);
      return;
    }
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      bool ok = a(i, i) == a(img, img);
      for (int j = 0; ok && j < i; ++j) {
        const int pj = perm[static_cast<std::size_t>(j)];
        ok = a(img, pj) == a(i, j) && a(pj, img) == a(j, i);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = img;
      used[static_cast<std::size_t>(img)] = true;
      extend(i + 1);
      used[static_cast<std::size_t>(img)] = false;
    }
    perm[static_cast<std::size_t>(i)] = -1;
  };
  extend(0);
  return out;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const FiniteType& t, int r) {
  return diagram_automorphisms(cartan_matrix(t), r);
}

std::vector<int> extend_to_roots(const RootSystem& rs, const DiagramAutomorphism& d) {
  std::vector<int> out(static_cast<std::size_t>(rs.size()));
  for (int idx = 0; idx < rs.size(); ++idx) {
    const Root& beta = rs.root(idx);
    Root image = Root::Zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) image(d.perm[static_cast<std::size_t>(i)]) = beta(i);
    auto j = rs.index_of(image);
    if (!j) throw std::logic_error("diagram automorphism does not preserve the root system");
    out[static_cast<std::size_t>(idx)] = *j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Affine types

namespace {

struct Family {
  Letter letter;
  int min_rank;
  int max_rank;  // 0 = unbounded
  int r;
  const char* label;
};

const std::vector<Family>& families() {
  static const std::vector<Family> f = {
      {Letter::A, 1, 1, 1, "A_1^(1)"},       {Letter::A, 2, 0, 1, "A_{N>=2}^(1)"}, {Letter::A, 2, 0, 2, "A_{N>=2}^(2)"},
      {Letter::B, 2, 0, 1, "B_{N>=2}^(1)"},  {Letter::C, 2, 0, 1, "C_{N>=2}^(1)"}, {Letter::D, 4, 4, 1, "D_4^(1)"},
      {Letter::D, 4, 4, 2, "D_4^(2)"},       {Letter::D, 4, 4, 3, "D_4^(3)"},      {Letter::D, 5, 0, 1, "D_{N>=5}^(1)"},
      {Letter::D, 5, 0, 2, "D_{N>=5}^(2)"},  {Letter::G, 2, 2, 1, "G_2^(1)"},      {Letter::F, 4, 4, 1, "F_4^(1)"},
      {Letter::E, 6, 6, 1, "E_6^(1)"},       {Letter::E, 6, 6, 2, "E_6^(2)"},      {Letter::E, 7, 7, 1, "E_7^(1)"},
      {Letter::E, 8, 8, 1, "E_8^(1)"},
  };
  return f;
}

Eigen::MatrixXi a_even_twisted(int l) {
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(l + 1, l + 1);
  if (l == 1) {
    a(0, 1) = -1;
    a(1, 0) = -4;
    return a;
  }
  for (int i = 0; i < l; ++i) {
    a(i, i + 1) = -1;
    a(i + 1, i) = -1;
  }
  a(1, 0) = -2;
  a(l, l - 1) = -2;
  return a;
}

}  // namespace

std::string AffineType::name() const { return finite.requested_name() + "^(" + std::to_string(r) + ")"; }

int AffineType::affine_rank() const {
  const int n = finite.rank;
  if (r == 1) return n;
  if (finite.letter == Letter::A) return (n + 1) / 2;
  if (finite.letter == Letter::D) return r == 2 ? n - 1 : 2;
  if (finite.letter == Letter::E) return 4;
  throw std::logic_error("affine rank of unsupported type");
}

AffineType lookup_affine_type(const FiniteType& t, int r) {
  const Letter requested = t.aliased ? Letter::B : t.letter;
  for (const Family& f : families()) {
    if (f.letter == requested && f.r == r && t.rank >= f.min_rank && (f.max_rank == 0 || t.rank <= f.max_rank)) {
      return AffineType{t, r, f.label};
    }
  }
  throw TypeError("unsupported affine type " + t.requested_name() + "^(" + std::to_string(r) +
                  "); valid families: " + affine_family_list());
}

AffineType parse_affine_type(const std::string& name) {
  const auto caret = name.find("^(");
  if (caret == std::string::npos) return lookup_affine_type(FiniteType::parse(name), 1);
  if (name.back() != ')') throw TypeError("malformed affine type name " + name);
  const std::string digits = name.substr(caret + 2, name.size() - caret - 3);
  if (digits.size() != 1 || !std::isdigit(static_cast<unsigned char>(digits[0])))
    throw TypeError("malformed affine type name " + name);
  return lookup_affine_type(FiniteType::parse(name.substr(0, caret)), digits[0] - '0');
}

std::vector<AffineType> affine_type_registry(const std::map<std::string, int>& rank_for_family) {
  std::vector<AffineType> out;
  for (const Family& f : families()) {
    int rank = f.min_rank;
    if (auto it = rank_for_family.find(f.label); it != rank_for_family.end()) rank = it->second;
    out.push_back(lookup_affine_type(FiniteType::make(f.letter, rank), f.r));
  }
  return out;
}

std::string affine_family_list() {
  std::string s;
  for (const Family& f : families()) {
    if (!s.empty()) s += ", ";
    s += f.label;
  }
  return s;
}

Eigen::MatrixXi extended_cartan_matrix(const RootSystem& rs) {
  const int n = rs.rank();
  const Root& theta = rs.root(rs.highest_root());
  const int theta_norm = rs.inner(theta, theta);
  Eigen::MatrixXi a(n + 1, n + 1);
  a(0, 0) = 2;
  a.bottomRightCorner(n, n) = rs.cartan();
  for (int j = 0; j < n; ++j) {
    Root alpha = Root::Zero(n);
    alpha(j) = 1;
    const int ip = rs.inner(theta, alpha);
    a(0, j + 1) = -2 * ip / theta_norm;
    a(j + 1, 0) = -2 * ip / rs.inner(alpha, alpha);
  }
  return a;
}

Eigen::MatrixXi reference_affine_gcm(const AffineType& t) {
  if (t.r == 1) return extended_cartan_matrix(RootSystem(t.finite));
  const int n = t.finite.rank;
  switch (t.finite.letter) {
    case Letter::A:
      if (n % 2 == 0) return a_even_twisted(n / 2);
      return extended_cartan_matrix(RootSystem(FiniteType::make(Letter::B, (n + 1) / 2))).transpose();
    case Letter::D:
      if (t.r == 2) return extended_cartan_matrix(RootSystem(FiniteType::make(Letter::C, n - 1))).transpose();
      return extended_cartan_matrix(RootSystem(FiniteType::make(Letter::G, 2))).transpose();
    case Letter::E:
      return extended_cartan_matrix(RootSystem(FiniteType::make(Letter::F, 4))).transpose();
    default:
      throw TypeError("no twisted form of " + t.finite.name());
  }
}

bool gcm_isomorphic(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto n = static_cast<int>(a.rows());
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[static_cast<std::size_t>(img)]) continue;
      bool ok = a(i, i) == b(img, img);
      for (int j = 0; ok && j < i; ++j) {
        const int pj = perm[static_cast<std::size_t>(j)];
        ok = b(img, pj) == a(i, j) && b(pj, img) == a(j, i);
      }
      if (!ok) continue;
      perm[static_cast<std::size_t>(i)] = img;
      used[static_cast<std::size_t>(img)] = true;
      if (extend(i + 1)) return true;
      used[static_cast<std::size_t>(img)] = false;
    }
    return false;
  };
  return extend(0);
}

std::optional<std::string> identify_affine_type(const Eigen::MatrixXi& a) {
  const auto size = static_cast<int>(a.rows());
  for (const Family& f : families()) {
    const int hi = f.max_rank == 0 ? 2 * size + 2 : f.max_rank;
    for (int n = f.min_rank; n <= hi; ++n) {
      AffineType t = lookup_affine_type(FiniteType::make(f.letter, n), f.r);
      if (t.finite.aliased) continue;
      if (t.affine_rank() + 1 != size) continue;
      if (gcm_isomorphic(a, reference_affine_gcm(t))) return t.name();
    }
  }
  return std::nullopt;
}

}  // namespace kmloop
