#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigensym/graph.hpp"
#include "eigensym/linalg.hpp"
#include "eigensym/perm_group.hpp"

namespace eigensym {

/// Tolerances threaded through the representation and span computations.
struct Tolerances {
  double tol = kDefaultTol;                  // rank / membership, relative
  double cluster_tol = kDefaultClusterTol;   // eigenvalue clustering, relative
};

struct IrreducibleBlock {
  Subspace basis;
  int dim = 0;
  int iso_class = -1;
};

struct IsotypicComponent {
  std::vector<IrreducibleBlock> blocks;
  int d = 0;          // dimension of the irreducible type
  int m = 0;          // multiplicity (number of blocks)
  int iso_class = -1;
  Subspace total;     // direct sum of the blocks

  int dim() const { return d * m; }
};

/// Isotypic components of an invariant ambient subspace, sorted by irrep
/// dimension and then by discovery order.
struct CanonicalDecomposition {
  std::vector<IsotypicComponent> components;
  Subspace ambient;

  int h() const { return static_cast<int>(components.size()); }
};

/// Element of Hom_G(W1, W2) as a dim(W2) x dim(W1) matrix in the two block
/// bases, unit Frobenius norm, phase fixed so the largest entry is real
/// positive.
struct Intertwiner {
  ComplexMatrix matrix;
};

/// Matrix of the action of sigma in the basis of w: B* P_sigma B.
ComplexMatrix block_matrix(const Subspace& w, const Permutation& sigma);

/// sigma b lies in u for every basis vector b (and every generator).
bool is_invariant(const Subspace& u, const Permutation& sigma);
bool is_invariant(const Subspace& u, std::span<const Permutation> generators);
bool is_invariant(const Subspace& u, const PermGroup& group);

/// Smallest k in [1, dim u] with t^k v outside u, or nullopt if every power
/// stays inside. Throws VectorNotInSubspace if v is not in u.
std::optional<int> non_invariance_witness(const Subspace& u, const ComplexMatrix& t, const ComplexVector& v);

/// Eigenspace of a permutation matrix, built exactly from the cycle
/// structure: eigenvalue exp(2 pi i num / den) with num/den reduced.
struct PermutationEigenspace {
  int num = 0;
  int den = 1;
  Complex value;
  Subspace space;
};
std::vector<PermutationEigenspace> permutation_eigenspaces(const Permutation& sigma, double tol = kDefaultTol);

/// The four equivalent statements: sigma is an automorphism; every
/// eigenspace of A is sigma-invariant; a common orthonormal eigenbasis of A
/// and P_sigma exists; every eigenspace of P_sigma is A-invariant.
struct EquivalenceReport {
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  bool s4 = false;

  bool consistent() const { return s1 == s2 && s2 == s3 && s3 == s4; }
};
EquivalenceReport verify_equivalence(const Graph& g, const Permutation& sigma, const Tolerances& tols = {});
/// Variant reusing a precomputed spectrum of g.
EquivalenceReport verify_equivalence(const Graph& g, const Spectrum& spectrum, const Permutation& sigma,
                               const Tolerances& tols = {});

/// Smallest subspace containing v and closed under every generator.
Subspace span_G(const ComplexVector& v, std::span<const Permutation> generators, double tol = kDefaultTol);

/// (1/|G|) sum_sigma P_sigma M P_sigma^{-1}. Requires an enumerated group.
ComplexMatrix group_average(const ComplexMatrix& m, const PermGroup& group);

/// Group average of the orthogonal projector onto `block`.
ComplexMatrix averaged_projection(const Subspace& block, const PermGroup& group);

/// Basis of Hom_G(w1, w2), solved as the nullspace of the stacked system
/// X R1(sigma) - R2(sigma) X = 0 over the generators. Throws NotInvariant.
std::vector<Intertwiner> hom_space(const Subspace& w1, const Subspace& w2, std::span<const Permutation> generators,
                                   double tol = kDefaultTol);

/// dim Hom_G(w, w) from characters: (1/|G|) sum |tr R(sigma)|^2, rounded.
int commutant_dimension(const Subspace& w, const PermGroup& group);

/// Throws NotIrreducible unless both inputs have a one-dimensional commutant.
bool are_isomorphic(const Subspace& w1, const Subspace& w2, std::span<const Permutation> generators,
                    double tol = kDefaultTol);

/// Splits an invariant subspace into irreducible blocks by sampling the
/// commutant: a random Hermitian matrix averaged over the group commutes with
/// the action, so its eigenspaces are invariant. Pieces recurse until each
/// certifies dim Hom(W, W) = 1.
std::vector<IrreducibleBlock> decompose_irreducibles(const Subspace& u, const PermGroup& group,
                                                     std::uint64_t seed = 0, const Tolerances& tols = {});

CanonicalDecomposition canonical_decomposition(const Subspace& ambient, const PermGroup& group,
                                               std::uint64_t seed = 0, const Tolerances& tols = {});

/// Agreement of decompositions computed with several seeds: same multiset of
/// (d, m) and matching component subspaces up to `angle_tol` radians.
struct CrossSeedReport {
  bool agrees = false;
  double max_angle = 0.0;
  std::vector<std::uint64_t> seeds;
};
CrossSeedReport cross_seed_check(const Subspace& ambient, const PermGroup& group, std::span<const std::uint64_t> seeds,
                                 const Tolerances& tols = {}, double angle_tol = 1e-7);

}  // namespace eigensym
