#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace kmloop {

/// Raised for (letter, rank) or (type, r) combinations outside the supported lists.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Letter { A, B, C, D, E, F, G };

/// Irreducible finite root system type X_N.
///
/// B_2 is accepted and canonicalized to C_2 with `aliased` set.
struct FiniteType {
  Letter letter = Letter::A;
  int rank = 1;
  bool aliased = false;

  static FiniteType make(Letter letter, int rank);
  /// Parses "A2", "D4", "E8", ...
  static FiniteType parse(const std::string& text);

  /// Canonical name, e.g. "C2" for an aliased B2.
  std::string name() const;
  /// Name as requested, e.g. "B2".
  std::string requested_name() const;

  friend bool operator==(const FiniteType& a, const FiniteType& b) { return a.letter == b.letter && a.rank == b.rank; }
};

char letter_char(Letter l);

/// Cartan matrix a_ij = <alpha_i^vee, alpha_j> in Bourbaki numbering.
Eigen::MatrixXi cartan_matrix(const FiniteType& t);

/// Root coordinates in the basis of simple roots.
using Root = Eigen::VectorXi;

/// Finite root system with a fixed deterministic ordering.
///
/// Indices 0..P-1 are the positive roots sorted by height, and within a
/// height so that alpha_1, ..., alpha_N appear in node order (descending
/// lexicographic coordinates). Index P + i holds the negative of root i.
class RootSystem {
 public:
  explicit RootSystem(const FiniteType& t);

  const FiniteType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  /// d_i with d_i a_ij symmetric; (alpha_i, alpha_i) = 2 d_i, shortest d = 1.
  const std::vector<int>& symmetrizer() const { return sym_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }
  const Root& root(int idx) const { return roots_[static_cast<std::size_t>(idx)]; }
  const std::vector<Root>& roots() const { return roots_; }
  bool is_positive(int idx) const { return idx < num_positive(); }
  int height(int idx) const { return root(idx).sum(); }
  int negative(int idx) const { return idx < num_positive() ? idx + num_positive() : idx - num_positive(); }
  /// Index of the i-th simple root (0-based node).
  int simple(int i) const { return i; }
  int highest_root() const { return num_positive() - 1; }
  int max_height() const { return height(highest_root()); }

  std::optional<int> index_of(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r).has_value(); }

  /// Symmetric form (a, b) with (alpha_i, alpha_j) = d_i a_ij.
  int inner(const Root& a, const Root& b) const;
  /// <beta, alpha_i^vee>.
  int pairing(const Root& beta, int i) const;
  /// s_i(beta).
  Root reflect(int i, const Root& beta) const;
  /// Coordinates c with beta^vee = sum c_i alpha_i^vee.
  Eigen::VectorXi coroot(const Root& beta) const;

 private:
  FiniteType type_;
  Eigen::MatrixXi cartan_;
  std::vector<int> sym_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
};

RootSystem build_root_system(const FiniteType& t);

/// Symmetrizer of a symmetrizable GCM (connected diagram), smallest positive
/// integers; nullopt when none exists.
std::optional<std::vector<int>> symmetrizer(const Eigen::MatrixXi& a);

/// Cartan-matrix-preserving permutation of the nodes.
struct DiagramAutomorphism {
  std::vector<int> perm;  // node i -> perm[i]
  int order = 1;

  static DiagramAutomorphism identity(int n);
  DiagramAutomorphism compose(const DiagramAutomorphism& inner) const;
  friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) { return a.perm == b.perm; }
};

/// All automorphisms of exact order r, in lexicographic order of `perm`.
std::vector<DiagramAutomorphism> diagram_automorphisms(const FiniteType& t, int r);
std::vector<DiagramAutomorphism> diagram_automorphisms(const Eigen::MatrixXi& cartan, int r);

/// Linear extension to the roots: result[i] is the index of pi(root i).
std::vector<int> extend_to_roots(const RootSystem& rs, const DiagramAutomorphism& d);

/// One affine type X_N^(r).
struct AffineType {
  FiniteType finite;
  int r = 1;
  /// Family label, e.g. "A_{N>=2}^(2)".
  std::string family;

  /// e.g. "A2^(2)" (uses the requested letter, so "B2^(1)" stays B2).
  std::string name() const;
  /// Rank l of the fixed subalgebra; the affine GCM is (l+1) x (l+1).
  int affine_rank() const;
};

/// Validates (t, r) against the sixteen affine families; throws TypeError.
AffineType lookup_affine_type(const FiniteType& t, int r);

/// Parses "A2^(2)"; a bare finite name such as "E8" means r = 1.
AffineType parse_affine_type(const std::string& name);

/// The sixteen families, each at its minimal rank unless `rank_for_family`
/// supplies a larger one.
std::vector<AffineType> affine_type_registry(const std::map<std::string, int>& rank_for_family = {});

/// Human-readable list of the sixteen families, for error messages.
std::string affine_family_list();

/// Extended Cartan matrix of the untwisted type: node 0 is -theta.
Eigen::MatrixXi extended_cartan_matrix(const RootSystem& rs);

/// Reference affine GCM of a type, built without folding: lowest-root
/// extension for r = 1, transposed untwisted matrices for the dual twisted
/// types, and the chain formula for A_{2l}^(2). Node numbering may differ
/// from a folding construction.
Eigen::MatrixXi reference_affine_gcm(const AffineType& t);

/// True when b is a relabeling of the nodes of a.
bool gcm_isomorphic(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);

/// Name of the first registry type (at a rank matching the matrix size)
/// whose reference GCM is isomorphic to `a`, or nullopt.
std::optional<std::string> identify_affine_type(const Eigen::MatrixXi& a);

}  // namespace kmloop
