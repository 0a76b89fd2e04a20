#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eigensym/linalg.hpp"
#include "eigensym/perm_group.hpp"
#include "eigensym/representation.hpp"

namespace eigensym {

/// Projection of a vector onto one isotypic component and onto its blocks.
struct ComponentParts {
  ComplexVector part;                       // v_i
  std::vector<ComplexVector> block_coords;  // w_ij in the basis of block j
  std::vector<double> block_norms;          // |w_ij|
};

struct ComponentSplit {
  std::vector<ComponentParts> components;
  double residual = 0.0;  // |v - sum_i v_i|
};

/// Throws VectorOutsideAmbient if v does not lie in cd.ambient.
ComponentSplit component_split(const ComplexVector& v, const CanonicalDecomposition& cd, double tol = kDefaultTol);

/// maps[i][j] is the d_i x d_i intertwiner psi_{j,m_i} from block j of
/// component i to the last block of that component (identity for j = m_i).
struct ReferenceIntertwiners {
  std::vector<std::vector<ComplexMatrix>> maps;
};

/// Throws MissingIntertwiner if some block pair has dim Hom != 1.
ReferenceIntertwiners reference_intertwiners(const CanonicalDecomposition& cd, std::span<const Permutation> generators,
                                             double tol = kDefaultTol);

/// Rank of the d x m matrix with columns psi_{j,m}(w_j). Parts with
/// |w_j| <= tol * vnorm contribute zero columns.
int independent_group_rank(const ComponentParts& parts, std::span<const ComplexMatrix> psi, double vnorm,
                           double tol = kDefaultTol);

struct ComponentSpan {
  int iso_class = 0;
  int d = 0;
  int m = 0;
  int n = 0;  // size of a maximal independent group
};

struct SpanReport {
  int dim_closure = 0;
  int dim_formula = 0;
  std::vector<ComponentSpan> per_component;
  std::optional<std::uint64_t> index_bound;
  bool index_bound_holds = true;   // dim_closure <= index_bound
  bool index_bound_equal = false;  // equality observed (reported, never asserted)
  bool agrees = false;
};

/// dim span(Gv) two ways: sum_i n_i d_i from the decomposition, and the
/// generator closure. Fills the index bound when the group is enumerated.
SpanReport dim_span_formula(const ComplexVector& v, const CanonicalDecomposition& cd,
                            const ReferenceIntertwiners& psi, const PermGroup& group, double tol = kDefaultTol);

/// sum_i min(dim V_i, d_i^2) = sum_i d_i min(d_i, m_i).
int max_span_value(const CanonicalDecomposition& cd);

struct SymmetricVector {
  ComplexVector vector;
  int dim = 0;
  int component = 0;
};

/// First basis vector of a smallest irreducible block.
SymmetricVector symmetric_vector(const CanonicalDecomposition& cd);

struct AsymmetricVector {
  ComplexVector vector;
  int dim = 0;        // verified by closure
  int max_value = 0;  // sum_i min(dim V_i, d_i^2)
  std::vector<int> capped_components;  // components with d_i < m_i
};

/// Builds, per component, parts w_1..w_k (k = min(d, m)) whose mapped images
/// psi_j(w_j) are independent, and sums them. Throws ConstructionFailed when
/// the closure does not reach max_value after retries.
AsymmetricVector asymmetric_vector(const CanonicalDecomposition& cd, const ReferenceIntertwiners& psi,
                                   std::span<const Permutation> generators, std::uint64_t seed = 0,
                                   double tol = kDefaultTol);

/// [G : G[v]] from the line stabilizer.
std::uint64_t index_bound(const ComplexVector& v, const PermGroup& group, double tol = kDefaultTol);

struct ExtremalReport {
  int ambient_dim = 0;
  SymmetricVector symmetric;
  int symmetric_closure_dim = 0;
  AsymmetricVector asymmetric;
  int max_value = 0;
};

ExtremalReport extremal_report(const CanonicalDecomposition& cd, const ReferenceIntertwiners& psi,
                               const PermGroup& group, std::uint64_t seed = 0, double tol = kDefaultTol);

}  // namespace eigensym
