#include "eigensym/span_analysis.hpp"

#include <algorithm>

#include "eigensym/error.hpp"
#include "eigensym/rng.hpp"

namespace eigensym {

ComponentSplit component_split(const ComplexVector& v, const CanonicalDecomposition& cd, double tol) {
  if (static_cast<int>(v.size()) != cd.ambient.ambient)
    throw Error(ErrorKind::DimensionMismatch, "vector length vs decomposition ambient");
  ComponentSplit split;
  ComplexVector sum(v.size());
  for (const auto& comp : cd.components) {
    ComponentParts parts;
    parts.part = comp.total.project(v);
    for (const auto& block : comp.blocks) {
      auto coords = block.basis.coordinates(v);
      parts.block_norms.push_back(norm(coords));
      parts.block_coords.push_back(std::move(coords));
    }
    sum = sum + parts.part;
    split.components.push_back(std::move(parts));
  }
  split.residual = norm(v - sum);
  if (split.residual > tol * norm(v))
    throw Error(ErrorKind::VectorOutsideAmbient, "vector has a component outside the decomposed subspace");
  return split;
}

ReferenceIntertwiners reference_intertwiners(const CanonicalDecomposition& cd, std::span<const Permutation> generators,
                                             double tol) {
  ReferenceIntertwiners psi;
  for (const auto& comp : cd.components) {
    std::vector<ComplexMatrix> maps;
    const auto& reference = comp.blocks.back().basis;
    for (int j = 0; j + 1 < comp.m; ++j) {
      auto hom = hom_space(comp.blocks[j].basis, reference, generators, tol);
      if (hom.size() != 1)
        throw Error(ErrorKind::MissingIntertwiner, "dim Hom between blocks of one component is " +
                                                       std::to_string(hom.size()) + ", expected 1");
      maps.push_back(std::move(hom.front().matrix));
    }
    maps.push_back(ComplexMatrix::identity(comp.d));
    psi.maps.push_back(std::move(maps));
  }
  return psi;
}

int independent_group_rank(const ComponentParts& parts, std::span<const ComplexMatrix> psi, double vnorm, double tol) {
  if (psi.size() != parts.block_coords.size())
    throw Error(ErrorKind::MissingIntertwiner, "one intertwiner per block is required");
  std::vector<ComplexVector> columns;
  for (std::size_t j = 0; j < psi.size(); ++j) {
    if (parts.block_norms[j] <= tol * vnorm) continue;
    columns.push_back(psi[j] * parts.block_coords[j]);
  }
  return numerical_rank(columns, tol);
}

SpanReport dim_span_formula(const ComplexVector& v, const CanonicalDecomposition& cd,
                            const ReferenceIntertwiners& psi, const PermGroup& group, double tol) {
  if (psi.maps.size() != cd.components.size())
    throw Error(ErrorKind::MissingIntertwiner, "intertwiners do not match the decomposition");
  SpanReport report;
  const auto split = component_split(v, cd, tol);
  const double vnorm = norm(v);
  for (std::size_t i = 0; i < cd.components.size(); ++i) {
    const auto& comp = cd.components[i];
    ComponentSpan cs{comp.iso_class, comp.d, comp.m, 0};
    cs.n = independent_group_rank(split.components[i], psi.maps[i], vnorm, tol);
    report.dim_formula += cs.n * cs.d;
    report.per_component.push_back(cs);
  }
  report.dim_closure = span_G(v, group.generators(), tol).dim();
  report.agrees = report.dim_closure == report.dim_formula;
  if (group.enumerated()) {
    report.index_bound = index_bound(v, group, tol);
    report.index_bound_holds = static_cast<std::uint64_t>(report.dim_closure) <= *report.index_bound;
    report.index_bound_equal = static_cast<std::uint64_t>(report.dim_closure) == *report.index_bound;
  }
  return report;
}

int max_span_value(const CanonicalDecomposition& cd) {
  int total = 0;
  for (const auto& comp : cd.components) total += comp.d * std::min(comp.d, comp.m);
  return total;
}

SymmetricVector symmetric_vector(const CanonicalDecomposition& cd) {
  if (cd.components.empty()) return {ComplexVector(cd.ambient.ambient), 0, -1};
  int best = 0;
  for (int i = 1; i < cd.h(); ++i)
    if (cd.components[i].d < cd.components[best].d) best = i;
  return {cd.components[best].blocks.front().basis.basis.front(), cd.components[best].d, best};
}

AsymmetricVector asymmetric_vector(const CanonicalDecomposition& cd, const ReferenceIntertwiners& psi,
                                   std::span<const Permutation> generators, std::uint64_t seed, double tol) {
  constexpr int kAttempts = 5;
  AsymmetricVector out;
  out.max_value = max_span_value(cd);
  for (int i = 0; i < cd.h(); ++i)
    if (cd.components[i].d < cd.components[i].m) out.capped_components.push_back(i);

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::uint64_t draw = 0;
    ComplexVector v(cd.ambient.ambient);
    bool built = true;
    for (int i = 0; i < cd.h() && built; ++i) {
      const auto& comp = cd.components[i];
      const int k = std::min(comp.d, comp.m);
      // Grow an independent group one block at a time: each new part must map
      // outside the span of the mapped earlier parts.
      Subspace mapped = Subspace::zero(comp.d, tol);
      for (int j = 0; j < k && built; ++j) {
        bool extended = false;
        for (int tries = 0; tries < kAttempts && !extended; ++tries) {
          const auto coords = random_vector(comp.d, derive_seed(seed + attempt, draw++));
          if (mapped.try_extend(psi.maps[i][j] * coords)) {
            v = v + comp.blocks[j].basis.lift(coords);
            extended = true;
          }
        }
        built = extended;
      }
    }
    if (!built) continue;
    const int achieved = span_G(v, generators, tol).dim();
    if (achieved == out.max_value) {
      out.vector = std::move(v);
      out.dim = achieved;
      return out;
    }
  }
  throw Error(ErrorKind::ConstructionFailed, "closure did not reach the extremal value " + std::to_string(out.max_value));
}

std::uint64_t index_bound(const ComplexVector& v, const PermGroup& group, double tol) {
  return line_stabilizer(group, v, tol).index;
}

ExtremalReport extremal_report(const CanonicalDecomposition& cd, const ReferenceIntertwiners& psi,
                               const PermGroup& group, std::uint64_t seed, double tol) {
  ExtremalReport report;
  report.ambient_dim = cd.ambient.dim();
  report.symmetric = symmetric_vector(cd);
  report.symmetric_closure_dim = span_G(report.symmetric.vector, group.generators(), tol).dim();
  report.asymmetric = asymmetric_vector(cd, psi, group.generators(), seed, tol);
  report.max_value = report.asymmetric.max_value;
  return report;
}

}  // namespace eigensym
