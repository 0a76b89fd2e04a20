#include <gtest/gtest.h>

#include "eigensym/error.hpp"
#include "eigensym/rng.hpp"
#include "eigensym/span_analysis.hpp"
#include "support/oracles.hpp"

namespace eigensym {
namespace {

ComplexVector e(int n, int i) {
  ComplexVector v(n);
  v[i] = 1.0;
  return v;
}

struct Analysis {
  Graph g;
  PermGroup group;
  CanonicalDecomposition cd;
  ReferenceIntertwiners psi;

  explicit Analysis(Graph graph)
      : g(std::move(graph)),
        group(automorphism_group(g)),
        cd(canonical_decomposition(Subspace::full(g.vertex_count()), group)),
        psi(reference_intertwiners(cd, group.generators())) {}

  int n() const { return g.vertex_count(); }
  int component_with(int d, int m) const {
    for (int i = 0; i < cd.h(); ++i)
      if (cd.components[i].d == d && cd.components[i].m == m) return i;
    return -1;
  }
};

std::vector<Graph> corpus() {
  return {builtin("petersen", 0), builtin("path", 3), builtin("cycle", 4), builtin("cycle", 5),
          builtin("complete", 4), builtin("disjoint_edges", 2), builtin("empty", 4), builtin("path", 5),
          builtin("cycle", 6)};
}

// Probe vectors: generic ones, ones supported on a random subset of
// components, and ones whose block parts are tied together by intertwiners
// (so n_i falls below min(d_i, m_i)).
std::vector<ComplexVector> probes(const Analysis& s, int count) {
  std::vector<ComplexVector> out;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t seed = derive_seed(1234, k);
    Xorshift64Star rng(seed);
    ComplexVector v = random_vector(s.n(), seed);
    if (k % 3 == 1) {
      ComplexVector w(s.n());
      for (const auto& comp : s.cd.components)
        if (rng.uniform() < 0.5) w = w + comp.total.project(v);
      v = w;
    } else if (k % 3 == 2) {
      ComplexVector w(s.n());
      for (std::size_t i = 0; i < s.cd.components.size(); ++i) {
        const auto& comp = s.cd.components[i];
        const auto coords = random_vector(comp.d, derive_seed(seed, i));
        // psi maps block j to the reference block; its adjoint goes back.
        for (int j = 0; j < comp.m; ++j) w = w + comp.blocks[j].basis.lift(s.psi.maps[i][j].adjoint() * coords);
      }
      v = w;
    }
    out.push_back(std::move(v));
  }
  return out;
}

TEST(ComponentSplitTest, Examples) {
  Analysis pet(builtin("petersen", 0));
  const auto ones = component_split(ComplexVector(10, 1.0), pet.cd);
  EXPECT_NEAR(norm(ones.components[0].part), std::sqrt(10.0), 1e-10);
  for (int i = 1; i < pet.cd.h(); ++i) EXPECT_LE(norm(ones.components[i].part), 1e-10);

  const int five = pet.component_with(5, 1);
  const auto v = pet.cd.components[five].total.lift(random_vector(5, 3));
  const auto split = component_split(v, pet.cd);
  for (int i = 0; i < pet.cd.h(); ++i) {
    if (i == five) EXPECT_NEAR(norm(split.components[i].part), norm(v), 1e-10);
    else EXPECT_LE(norm(split.components[i].part), 1e-10);
  }

  Analysis p3(builtin("path", 3));
  const int trivial = p3.component_with(1, 2);
  ASSERT_GE(trivial, 0);
  const auto e2 = component_split(e(3, 1), p3.cd);
  EXPECT_NEAR(norm(e2.components[trivial].part - e(3, 1)), 0.0, 1e-10);
  EXPECT_LE(norm(e2.components[1 - trivial].part), 1e-10);
  for (double bn : e2.components[trivial].block_norms) EXPECT_GT(bn, 1e-3);
}

TEST(ComponentSplitTest, OutsideAmbient) {
  Analysis pet(builtin("petersen", 0));
  CanonicalDecomposition partial = pet.cd;
  partial.components.erase(partial.components.begin());
  EXPECT_THROW(component_split(ComplexVector(10, 1.0), partial), Error);
  try {
    component_split(ComplexVector(10, 1.0), partial);
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::VectorOutsideAmbient);
  }
}

TEST(ComponentSplitProperty, PartsReconstruct) {
  for (const Graph& g : corpus()) {
    Analysis s(g);
    for (const auto& v : probes(s, 10)) {
      const auto split = component_split(v, s.cd);
      EXPECT_LE(split.residual, 1e-8 * norm(v));
      ComplexVector sum(s.n());
      for (std::size_t i = 0; i < split.components.size(); ++i)
        for (int j = 0; j < s.cd.components[i].m; ++j)
          sum = sum + s.cd.components[i].blocks[j].basis.lift(split.components[i].block_coords[j]);
      EXPECT_LE(norm(sum - v), 1e-8 * std::max(1.0, norm(v)));
    }
  }
}

TEST(IndependentGroupRankTest, Examples) {
  Analysis pet(builtin("petersen", 0));
  const auto split = component_split(ComplexVector(10, 1.0), pet.cd);
  EXPECT_EQ(independent_group_rank(split.components[0], pet.psi.maps[0], std::sqrt(10.0)), 1);
  EXPECT_EQ(independent_group_rank(split.components[1], pet.psi.maps[1], std::sqrt(10.0)), 0);

  Analysis p3(builtin("path", 3));
  const int trivial = p3.component_with(1, 2);
  const auto v = random_vector(3, 5);
  const auto parts = component_split(v, p3.cd);
  EXPECT_EQ(independent_group_rank(parts.components[trivial], p3.psi.maps[trivial], norm(v)), 1);

  EXPECT_THROW(independent_group_rank(parts.components[trivial], std::span<const ComplexMatrix>(), norm(v)), Error);
}

TEST(DimSpanFormulaTest, Examples) {
  Analysis pet(builtin("petersen", 0));
  const auto generic = dim_span_formula(random_vector(10, 0), pet.cd, pet.psi, pet.group);
  EXPECT_EQ(generic.dim_closure, 10);
  EXPECT_EQ(generic.dim_formula, 10);
  EXPECT_TRUE(generic.agrees);

  const int four = pet.component_with(4, 1);
  const auto v = pet.cd.components[four].total.lift(random_vector(4, 1));
  const auto r = dim_span_formula(v, pet.cd, pet.psi, pet.group);
  EXPECT_EQ(r.dim_closure, 4);
  EXPECT_EQ(r.dim_formula, 4);

  Analysis p3(builtin("path", 3));
  const auto e1 = dim_span_formula(e(3, 0), p3.cd, p3.psi, p3.group);
  EXPECT_EQ(e1.dim_closure, 2);
  EXPECT_TRUE(e1.agrees);
  for (const auto& c : e1.per_component) EXPECT_EQ(c.n, 1);
  ASSERT_TRUE(e1.index_bound.has_value());
  EXPECT_EQ(*e1.index_bound, 2u);
  EXPECT_TRUE(e1.index_bound_equal);
}

// dim_formula equals the rank of the full orbit, and the closure agrees.
TEST(DimSpanFormulaProperty, OracleEquivalence) {
  for (const Graph& g : corpus()) {
    Analysis s(g);
    for (const auto& v : probes(s, 24)) {
      const auto r = dim_span_formula(v, s.cd, s.psi, s.group);
      const int oracle = oracle::orbit_span_dim(v, s.group.elements());
      EXPECT_EQ(r.dim_formula, oracle) << to_graph6(g);
      EXPECT_EQ(r.dim_closure, oracle) << to_graph6(g);
      EXPECT_TRUE(r.agrees);
      int total = 0;
      for (const auto& c : r.per_component) {
        EXPECT_GE(c.n, 0);
        EXPECT_LE(c.n, std::min(c.d, c.m));
        total += c.n * c.d;
      }
      EXPECT_EQ(total, r.dim_formula);
      ASSERT_TRUE(r.index_bound.has_value());
      EXPECT_TRUE(r.index_bound_holds);
      EXPECT_LE(static_cast<std::uint64_t>(r.dim_closure), *r.index_bound);
    }
  }
}

TEST(DimSpanFormulaProperty, ScaleInvariance) {
  for (const Graph& g : corpus()) {
    Analysis s(g);
    for (const auto& v : probes(s, 6)) {
      const int base = dim_span_formula(v, s.cd, s.psi, s.group).dim_formula;
      for (Complex c : {Complex(1e-3), Complex(-7.5), Complex(0.3, 2.0)}) {
        const auto r = dim_span_formula(c * v, s.cd, s.psi, s.group);
        EXPECT_EQ(r.dim_formula, base);
        EXPECT_EQ(r.dim_closure, base);
      }
    }
  }
}

TEST(ExtremalTest, SymmetricVectors) {
  Analysis pet(builtin("petersen", 0));
  const auto sym = symmetric_vector(pet.cd);
  EXPECT_EQ(sym.dim, 1);
  EXPECT_EQ(span_G(sym.vector, pet.group.generators()).dim(), 1);

  // Inside V_1 every nonzero vector spans all of V_1.
  const int five = pet.component_with(5, 1);
  const auto v1 = canonical_decomposition(pet.cd.components[five].total, pet.group);
  const auto s1 = symmetric_vector(v1);
  EXPECT_EQ(s1.dim, 5);
  EXPECT_EQ(span_G(s1.vector, pet.group.generators()).dim(), 5);

  const auto v3 = canonical_decomposition(pet.cd.components[0].total, pet.group);
  const auto s3 = symmetric_vector(v3);
  EXPECT_EQ(s3.dim, 1);
  for (int i = 1; i < 10; ++i) EXPECT_NEAR(std::abs(s3.vector[i] - s3.vector[0]), 0.0, 1e-10);

  Analysis p3(builtin("path", 3));
  const auto sp = symmetric_vector(p3.cd);
  EXPECT_EQ(sp.dim, 1);
  EXPECT_EQ(span_G(sp.vector, p3.group.generators()).dim(), 1);
}

TEST(ExtremalTest, AsymmetricVectors) {
  Analysis pet(builtin("petersen", 0));
  const auto a = asymmetric_vector(pet.cd, pet.psi, pet.group.generators());
  EXPECT_EQ(a.dim, 10);
  EXPECT_EQ(a.max_value, 10);
  EXPECT_TRUE(a.capped_components.empty());

  Analysis p3(builtin("path", 3));
  const auto b = asymmetric_vector(p3.cd, p3.psi, p3.group.generators());
  EXPECT_EQ(b.dim, 2);
  EXPECT_EQ(b.max_value, 2);
  EXPECT_EQ(b.capped_components.size(), 1u);
  EXPECT_EQ(oracle::orbit_span_dim(b.vector, p3.group.elements()), 2);

  const PermGroup trivial = closure(6, std::vector<Permutation>{});
  const auto cd = canonical_decomposition(Subspace::full(6), trivial);
  const auto psi = reference_intertwiners(cd, trivial.generators());
  const auto c = asymmetric_vector(cd, psi, trivial.generators());
  EXPECT_EQ(c.dim, 1);
  EXPECT_EQ(c.capped_components, std::vector<int>{0});
}

TEST(ExtremalProperty, Sandwich) {
  for (const Graph& g : corpus()) {
    Analysis s(g);
    const auto report = extremal_report(s.cd, s.psi, s.group);
    EXPECT_EQ(report.asymmetric.dim, report.max_value);
    EXPECT_EQ(report.symmetric_closure_dim, report.symmetric.dim);
    int bound = 0;
    for (const auto& comp : s.cd.components) bound += std::min(comp.dim(), comp.d * comp.d);
    EXPECT_EQ(report.max_value, bound);
    for (const auto& u : probes(s, 20)) {
      const int dim = span_G(u, s.group.generators()).dim();
      if (dim == 0) continue;
      EXPECT_LE(report.symmetric.dim, dim);
      EXPECT_LE(dim, report.asymmetric.dim);
    }
  }
}

// A single vector generates a whole isotypic component iff d >= m.
TEST(ExtremalProperty, CyclicVectorIffDimensionDominatesMultiplicity) {
  Analysis p3(builtin("path", 3));
  const int trivial = p3.component_with(1, 2);
  const auto& comp = p3.cd.components[trivial];
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto v = comp.total.lift(random_vector(comp.dim(), seed));
    EXPECT_LT(span_G(v, p3.group.generators()).dim(), comp.dim());
  }
  Analysis pet(builtin("petersen", 0));
  for (const auto& c : pet.cd.components) {
    ASSERT_GE(c.d, c.m);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto v = c.total.lift(random_vector(c.dim(), seed));
      EXPECT_EQ(span_G(v, pet.group.generators()).dim(), c.dim());
    }
  }
}

TEST(IndexBoundTest, Examples) {
  Analysis pet(builtin("petersen", 0));
  EXPECT_EQ(index_bound(ComplexVector(10, 1.0), pet.group), 1u);
  EXPECT_EQ(index_bound(ComplexVector(10), pet.group), 1u);
  const int five = pet.component_with(5, 1);
  const auto v = pet.cd.components[five].total.lift(random_vector(5, 11));
  const auto bound = index_bound(v, pet.group);
  EXPECT_EQ(120u % bound, 0u);
  EXPECT_GE(bound, 5u);

  const PermGroup lazy(10, pet.group.generators());
  try {
    index_bound(v, lazy);
    ADD_FAILURE() << "expected NotEnumerated";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotEnumerated);
  }
}

}  // namespace
}  // namespace eigensym
