#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kmloop/chevalley.hpp"
#include "kmloop/report.hpp"
#include "kmloop/ring_aut.hpp"

namespace kmloop {

/// Element of g (x) S: Chevalley coordinates with Laurent coefficients.
using LoopElement = LieElement<LaurentPoly>;

/// Raised when an eigenvalue of sigma is missing from the coefficient field.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the affine generators cannot be built or read off.
class GeneratorError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A generator of Gamma acting on g (x) S by x (x) s -> M x (x) g'(s).
struct GammaGenerator {
  std::string name;
  RingAut ring;
  LieAutomorphism lie;
};

/// Galois setup for one affine type: the ring S over R, the group Gamma and
/// its action on g (x) S.
struct GaloisSetup {
  AffineType type;
  GaloisRing ring;
  std::shared_ptr<const ChevalleyBasis> cb;
  /// Lift of the diagram automorphism sigma (identity for r = 1).
  LieAutomorphism sigma;
  std::vector<GammaGenerator> gens;

  /// Case defaults to I, II, IIIb for r = 1, 2, 3. Throws SetupMismatch when
  /// the case does not fit r.
  static GaloisSetup make(const AffineType& type, std::optional<GaloisCase> c = std::nullopt);

  int r() const { return ring.r; }
  GaloisCase galois_case() const { return ring.galois_case; }
  const ChevalleyBasis& basis() const { return *cb; }
  int dim() const { return cb->dimension(); }
};

/// x (x) s -> M x (x) g'(s).
LoopElement gamma_apply(const GammaGenerator& g, const LoopElement& x);
bool is_gamma_fixed(const GaloisSetup& setup, const LoopElement& x);

/// Pieces of g as sigma-eigenspaces: eigenspaces[j] has the xi^j- (or (-1)^j-)
/// eigenvectors of sigma as columns.
struct Eigenspaces {
  int r = 1;
  std::vector<ExactMatrix<Scalar>> spaces;
  std::vector<int> dims() const;
};

Eigenspaces eigenspace_decomposition(const ChevalleyBasis& cb, const LieAutomorphism& sigma, Field field = Field::Cyc3);

/// Gamma-fixed elements of g (x) S with exponents k in [-d r, d r], a basis
/// over the base field of R. An element in degree t^(k/r) has its g-part in
/// the xi^(-k)-eigenspace of sigma.
struct FixedPointBasis {
  int window = 0;
  int r = 1;
  std::vector<int> degree;
  std::vector<LoopElement> elements;

  std::map<int, int> counts() const;
  std::vector<LoopElement> at_degree(int k) const;
};

FixedPointBasis fixed_point_basis(const GaloisSetup& setup, int d);

/// Fixed vectors in one degree as Chevalley coordinates (columns).
ExactMatrix<Scalar> fixed_space(const GaloisSetup& setup, int k);

/// g-part of the t^(k/r) coefficient.
LieElement<Scalar> degree_part(const LoopElement& x, int k);
LoopElement with_degree(const LieElement<Scalar>& v, int k, int r);

inline LoopElement loop_bracket(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y) {
  return cb.bracket(x, y);
}

/// (E_i, F_i, H_i), node 0 affine, nodes 1..l the sigma-orbits of simple
/// roots ordered by smallest member.
struct AffineGenerators {
  std::vector<LoopElement> E, F, H;
  std::vector<std::vector<int>> orbits;
  int size() const { return static_cast<int>(E.size()); }
};

AffineGenerators affine_generators(const GaloisSetup& setup);

/// a_ij read off from [H_i, E_j] = a_ij E_j.
Eigen::MatrixXi affine_gcm_from_generators(const ChevalleyBasis& cb, const AffineGenerators& g);

/// Generalized Cartan matrix axioms, determinant 0 and positive proper
/// principal minors.
bool is_affine_gcm(const Eigen::MatrixXi& a);

/// Smallest positive integer vector c with c^T A = 0 (dual Kac labels).
Eigen::VectorXi dual_kac_labels(const Eigen::MatrixXi& a);

/// The Chevalley-Serre relations for A, each instance recorded.
Report verify_serre(const ChevalleyBasis& cb, const AffineGenerators& g, const Eigen::MatrixXi& a);

/// Full Lie-level suite for one setup: generators, GCM, Serre relations,
/// fixedness, the central relation and per-degree fixed-point counts.
Report verify_lie_level(const GaloisSetup& setup, int d);

/// D_4 base change between the case IIIb (S_3) and IIIa (Z/3) descriptions.
Report base_change_check(int d, std::uint64_t seed = 0, int trials = 100);

/// lambda with y = lambda x, when it exists.
std::optional<Scalar> proportionality(const LoopElement& y, const LoopElement& x);

/// Terms "(poly)*label" joined by " + "; coefficients re-expressed over
/// t^(1/r) when r > 0.
std::string render(const ChevalleyBasis& cb, const LoopElement& x, int r = 0);

}  // namespace kmloop
