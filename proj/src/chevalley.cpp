#include "kmloop/chevalley.hpp"

#include <map>
#include <sstream>

namespace kmloop {
namespace {

using Acc = std::map<int, std::int64_t>;

void add_scaled(Acc& acc, const SparseVec& v, std::int64_t c) {
  if (c == 0) return;
  for (const auto& [k, n] : v) acc[k] += c * n;
}

SparseVec to_sparse(const Acc& acc, std::int64_t divisor = 1) {
  SparseVec out;
  for (const auto& [k, n] : acc) {
    if (n == 0) continue;
    if (n % divisor != 0) throw std::logic_error("structure constant is not integral");
    out.emplace_back(k, n / divisor);
  }
  return out;
}

// Decomposition e_beta = [e_i, e_rest] / (q + 1) for a non-simple positive root.
struct Split {
  int node = -1;
  int rest = -1;
  int q = 0;
};

Split split_root(const RootSystem& rs, int beta) {
  const Root& b = rs.root(beta);
  for (int i = 0; i < rs.rank(); ++i) {
    Root rest = b;
    rest(i) -= 1;
    auto idx = rs.index_of(rest);
    if (!idx || !rs.is_positive(*idx)) continue;
    Split s{i, *idx, 0};
    Root down = rest;
    for (;;) {
      down(i) -= 1;
      if (!rs.contains(down)) break;
      ++s.q;
    }
    return s;
  }
  throw std::logic_error("simple root has no split");
}

}  // namespace

int ChevalleyBasis::e(int root) const {
  const int p = rs_.num_positive();
  return root < p ? p - 1 - root : root + rank();
}

Root ChevalleyBasis::weight(int b) const {
  int r = root_of(b);
  return r < 0 ? Root(Root::Zero(rank())) : rs_.root(r);
}

std::string ChevalleyBasis::label(int b) const {
  int r = root_of(b);
  if (r < 0) return "h" + std::to_string(b - rs_.num_positive() + 1);
  std::ostringstream os;
  os << (rs_.is_positive(r) ? 'e' : 'f') << '[';
  Root w = rs_.is_positive(r) ? rs_.root(r) : Root(-rs_.root(r));
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << w(i);
  os << ']';
  return os.str();
}

int ChevalleyBasis::structure_constant(int alpha, int beta) const {
  auto sum = rs_.index_of(rs_.root(alpha) + rs_.root(beta));
  if (!sum) return 0;
  for (const auto& [k, n] : bracket_basis(e(alpha), e(beta)))
    if (k == e(*sum)) return static_cast<int>(n);
  return 0;
}

Eigen::VectorXi ChevalleyBasis::coroot_vector(int root) const {
  Eigen::VectorXi out = Eigen::VectorXi::Zero(rank());
  for (const auto& [k, n] : bracket_basis(e(root), e(rs_.negative(root)))) out(k - h(0)) = static_cast<int>(n);
  return out;
}

Eigen::MatrixXi ChevalleyBasis::ad(int b) const {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(dim_, dim_);
  for (int c = 0; c < dim_; ++c)
    for (const auto& [k, n] : bracket_basis(b, c)) m(k, c) = static_cast<int>(n);
  return m;
}

ChevalleyBasis::ChevalleyBasis(RootSystem rs) : rs_(std::move(rs)) {
  const int n = rs_.rank();
  const int p = rs_.num_positive();
  const int nroots = rs_.size();
  dim_ = nroots + n;
  root_of_.assign(static_cast<std::size_t>(dim_), -1);
  for (int r = 0; r < nroots; ++r) root_of_[static_cast<std::size_t>(e(r))] = r;

  std::vector<Split> split(static_cast<std::size_t>(p));
  for (int b = n; b < p; ++b) split[static_cast<std::size_t>(b)] = split_root(rs_, b);

  auto shifted = [&](int root, int node, int delta) -> int {
    Root w = rs_.root(root);
    w(node) += delta;
    auto idx = rs_.index_of(w);
    return idx && rs_.is_positive(*idx) ? *idx : -1;
  };

  // E[i][g]: [e_i, e_g] = E e_{g + alpha_i};  F[j][m]: [f_j, e_m] = F e_{m - alpha_j}
  // for positive roots g and non-simple positive m.
  std::vector<std::vector<std::int64_t>> E(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(p), 0));
  std::vector<std::vector<std::int64_t>> F = E;
  auto at = [](std::vector<std::vector<std::int64_t>>& t, int i, int r) -> std::int64_t& {
    return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
  };
  // Coefficient of e_{g + alpha_i - alpha_j} in [f_j, [e_i, e_g]] computed by
  // the Leibniz rule from lower-height data.
  auto f_of_e_bracket = [&](int j, int i, int g) -> std::int64_t {
    std::int64_t val = 0;
    if (i == j) val -= rs_.pairing(rs_.root(g), i);
    if (g == j) {
      val += rs_.cartan()(j, i);
    } else if (g >= n) {
      int lower = shifted(g, j, -1);
      if (lower >= 0) val += at(F, j, g) * at(E, i, lower);
    }
    return val;
  };

  for (int height = 2; height <= rs_.max_height(); ++height) {
    for (int m = n; m < p; ++m) {
      if (rs_.height(m) != height) continue;
      const Split& s = split[static_cast<std::size_t>(m)];
      for (int j = 0; j < n; ++j) {
        if (shifted(m, j, -1) < 0) continue;
        std::int64_t val = f_of_e_bracket(j, s.node, s.rest);
        if (val % (s.q + 1) != 0) throw std::logic_error("non-integral f-action");
        at(F, j, m) = val / (s.q + 1);
      }
    }
    for (int g = 0; g < p; ++g) {
      if (rs_.height(g) != height - 1) continue;
      for (int i = 0; i < n; ++i) {
        int m = shifted(g, i, 1);
        if (m < 0) continue;
        const Split& s = split[static_cast<std::size_t>(m)];
        if (s.node == i && s.rest == g) {
          at(E, i, g) = s.q + 1;
          continue;
        }
        int j = 0;
        while (j < n && (shifted(m, j, -1) < 0 || at(F, j, m) == 0)) ++j;
        if (j == n) throw std::logic_error("positive root vector killed by every f_j");
        std::int64_t val = f_of_e_bracket(j, i, g);
        if (val % at(F, j, m) != 0) throw std::logic_error("non-integral e-action");
        at(E, i, g) = val / at(F, j, m);
      }
    }
  }

  table_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), {});
  auto cell = [&](int a, int b) -> SparseVec& {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(b)];
  };

  // Cartan rows.
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < nroots; ++r) {
      int c = rs_.pairing(rs_.root(r), i);
      if (c != 0) cell(h(i), e(r)) = {{e(r), c}};
    }

  // Simple generators.
  for (int i = 0; i < n; ++i) {
    const int ei = e(i);
    const int fi = e(rs_.negative(i));
    for (int j = 0; j < n; ++j) {
      int c = rs_.cartan()(j, i);
      if (c != 0) {
        cell(ei, h(j)) = {{ei, -c}};
        cell(fi, h(j)) = {{fi, c}};
      }
    }
    for (int g = 0; g < p; ++g) {
      const int fg = e(rs_.negative(g));
      int up = shifted(g, i, 1);
      if (up >= 0) {
        cell(ei, e(g)) = {{e(up), at(E, i, g)}};
        cell(fi, fg) = {{e(rs_.negative(up)), -at(E, i, g)}};
      }
      if (g == i) {
        cell(ei, fg) = {{h(i), 1}};
        cell(fi, e(g)) = {{h(i), -1}};
      } else if (g >= n) {
        int down = shifted(g, i, -1);
        if (down >= 0) {
          cell(fi, e(g)) = {{e(down), at(F, i, g)}};
          cell(ei, fg) = {{e(rs_.negative(down)), -at(F, i, g)}};
        }
      }
    }
  }

  auto apply_row = [&](int x, const SparseVec& v) {
    Acc acc;
    for (const auto& [k, c] : v) add_scaled(acc, cell(x, k), c);
    return acc;
  };

  // Remaining root vectors, by height, via [[a, b], y] = [a, [b, y]] - [b, [a, y]].
  for (int beta = n; beta < p; ++beta) {
    const Split& s = split[static_cast<std::size_t>(beta)];
    for (int sign : {1, -1}) {
      int x = sign > 0 ? e(beta) : e(rs_.negative(beta));
      int a = sign > 0 ? e(s.node) : e(rs_.negative(s.node));
      int b = sign > 0 ? e(s.rest) : e(rs_.negative(s.rest));
      for (int y = 0; y < dim_; ++y) {
        Acc acc = apply_row(a, cell(b, y));
        for (const auto& [k, c] : apply_row(b, cell(a, y))) acc[k] -= c;
        if (sign < 0)
          for (auto& kv : acc) kv.second = -kv.second;
        cell(x, y) = to_sparse(acc, s.q + 1);
      }
    }
  }

  for (int r = 0; r < p; ++r) {
    if (coroot_vector(r) != rs_.coroot(rs_.root(r))) throw std::logic_error("[e_a, e_-a] is not the coroot");
  }
}

ChevalleyBasis structure_constants(const RootSystem& rs) { return ChevalleyBasis(rs); }

LieAutomorphism lift_automorphism(const ChevalleyBasis& cb, const DiagramAutomorphism& d) {
  const RootSystem& rs = cb.roots();
  const int n = rs.rank();
  const int p = rs.num_positive();
  const int dim = cb.dimension();
  std::vector<int> pi = extend_to_roots(rs, d);

  LieAutomorphism m;
  m.diagram = d;
  m.order = d.order;
  m.image.assign(static_cast<std::size_t>(dim), -1);
  m.sign.assign(static_cast<std::size_t>(dim), 0);
  auto set = [&](int b, int img, int s) {
    m.image[static_cast<std::size_t>(b)] = img;
    m.sign[static_cast<std::size_t>(b)] = s;
  };
  for (int i = 0; i < n; ++i) {
    int pi_i = d.perm[static_cast<std::size_t>(i)];
    set(cb.h(i), cb.h(pi_i), 1);
    set(cb.e(i), cb.e(pi_i), 1);
    set(cb.e(rs.negative(i)), cb.e(rs.negative(pi_i)), 1);
  }
  // M x = (1/(q+1)) [M e_i, M e_rest] for x = e_beta, and likewise for e_{-beta}.
  for (int beta = n; beta < p; ++beta) {
    for (int neg : {0, 1}) {
      int target = neg ? rs.negative(beta) : beta;
      Split s = split_root(rs, beta);
      int a = neg ? rs.negative(s.node) : s.node;
      int b = neg ? rs.negative(s.rest) : s.rest;
      int ma = m.image[static_cast<std::size_t>(cb.e(a))];
      int mb = m.image[static_cast<std::size_t>(cb.e(b))];
      std::int64_t sgn = m.sign[static_cast<std::size_t>(cb.e(a))] * m.sign[static_cast<std::size_t>(cb.e(b))];
      const SparseVec& br = cb.bracket_basis(ma, mb);
      int img = cb.e(pi[static_cast<std::size_t>(target)]);
      std::int64_t c = br.size() == 1 && br[0].first == img ? sgn * br[0].second : 0;
      // [e_i, e_rest] = (q+1) e_beta and [e_{-i}, e_{-rest}] = -(q+1) e_{-beta}.
      std::int64_t norm = neg ? -(s.q + 1) : (s.q + 1);
      if (c != norm && c != -norm) throw LiftError("lift of a diagram automorphism is not a signed permutation");
      set(cb.e(target), img, c == norm ? 1 : -1);
    }
  }
  m.matrix = Eigen::MatrixXi::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) m.matrix(m.image[static_cast<std::size_t>(b)], b) = m.sign[static_cast<std::size_t>(b)];
  return m;
}

bool is_lie_automorphism(const ChevalleyBasis& cb, const LieAutomorphism& m) {
  const int dim = cb.dimension();
  for (int a = 0; a < dim; ++a) {
    const int ia = m.image[static_cast<std::size_t>(a)];
    const int sa = m.sign[static_cast<std::size_t>(a)];
    for (int b = 0; b < dim; ++b) {
      Acc lhs;
      for (const auto& [k, c] : cb.bracket_basis(a, b))
        lhs[m.image[static_cast<std::size_t>(k)]] += m.sign[static_cast<std::size_t>(k)] * c;
      Acc rhs;
      std::int64_t s = sa * m.sign[static_cast<std::size_t>(b)];
      add_scaled(rhs, cb.bracket_basis(ia, m.image[static_cast<std::size_t>(b)]), s);
      if (to_sparse(lhs) != to_sparse(rhs)) return false;
    }
  }
  return true;
}

nlohmann::ordered_json structure_table_json(const ChevalleyBasis& cb) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int a = 0; a < cb.dimension(); ++a)
    for (int b = 0; b < cb.dimension(); ++b) {
      const SparseVec& v = cb.bracket_basis(a, b);
      if (v.empty()) continue;
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [k, n] : v) terms.push_back({cb.label(k), n});
      out.push_back({cb.label(a), cb.label(b), terms});
    }
  return out;
}

}  // namespace kmloop
