#include "eigensym/representation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "eigensym/error.hpp"
#include "eigensym/rng.hpp"

namespace eigensym {

ComplexMatrix block_matrix(const Subspace& w, const Permutation& sigma) {
  if (sigma.degree() != w.ambient) throw Error(ErrorKind::DimensionMismatch, "permutation degree vs subspace ambient");
  const int d = w.dim();
  ComplexMatrix r(d, d);
  for (int b = 0; b < d; ++b) {
    const ComplexVector image = act(sigma, w.basis[b]);
    for (int a = 0; a < d; ++a) r(a, b) = inner(image, w.basis[a]);
  }
  return r;
}

bool is_invariant(const Subspace& u, const Permutation& sigma) {
  if (sigma.degree() != u.ambient) throw Error(ErrorKind::DimensionMismatch, "permutation degree vs subspace ambient");
  for (const auto& b : u.basis)
    if (!contains(u, act(sigma, b))) return false;
  return true;
}

bool is_invariant(const Subspace& u, std::span<const Permutation> generators) {
  for (const auto& g : generators)
    if (!is_invariant(u, g)) return false;
  return true;
}

bool is_invariant(const Subspace& u, const PermGroup& group) {
  if (group.degree() != u.ambient) throw Error(ErrorKind::DimensionMismatch, "group degree vs subspace ambient");
  return is_invariant(u, std::span<const Permutation>(group.generators()));
}

std::optional<int> non_invariance_witness(const Subspace& u, const ComplexMatrix& t, const ComplexVector& v) {
  if (t.rows() != u.ambient || t.cols() != u.ambient || static_cast<int>(v.size()) != u.ambient)
    throw Error(ErrorKind::DimensionMismatch, "operator, vector and subspace must share the ambient dimension");
  if (!contains(u, v)) throw Error(ErrorKind::VectorNotInSubspace, "starting vector is not in the subspace");
  ComplexVector x = v;
  for (int k = 1; k <= u.dim(); ++k) {
    x = t * x;
    if (!contains(u, x)) return k;
  }
  return std::nullopt;
}

std::vector<PermutationEigenspace> permutation_eigenspaces(const Permutation& sigma, double tol) {
  const int n = sigma.degree();
  std::vector<PermutationEigenspace> spaces;
  auto slot = [&](int num, int den) -> PermutationEigenspace& {
    for (auto& s : spaces)
      if (s.num == num && s.den == den) return s;
    const double angle = 2.0 * std::numbers::pi * num / den;
    spaces.push_back({num, den, std::polar(1.0, angle), Subspace::zero(n, tol)});
    return spaces.back();
  };

  // For a cycle c_0 -> c_1 -> ... -> c_{l-1}, x_k = sum_j w^{-jk} e_{c_j}
  // satisfies P x_k = w^k x_k with w = exp(2 pi i / l).
  for (const auto& cycle : sigma.cycles()) {
    const int len = static_cast<int>(cycle.size());
    const double scale = 1.0 / std::sqrt(static_cast<double>(len));
    for (int k = 0; k < len; ++k) {
      ComplexVector x(n);
      for (int j = 0; j < len; ++j) {
        const double angle = -2.0 * std::numbers::pi * ((static_cast<long long>(j) * k) % len) / len;
        x[cycle[j]] = std::polar(scale, angle);
      }
      const int g = std::gcd(k, len);
      slot(k / g, len / g).space.basis.push_back(std::move(x));
    }
  }
  std::sort(spaces.begin(), spaces.end(), [](const auto& a, const auto& b) {
    return static_cast<long long>(a.num) * b.den < static_cast<long long>(b.num) * a.den;
  });
  return spaces;
}

EquivalenceReport verify_equivalence(const Graph& g, const Permutation& sigma, const Tolerances& tols) {
  return verify_equivalence(g, symmetric_eig(g.adjacency(), tols.cluster_tol), sigma, tols);
}

EquivalenceReport verify_equivalence(const Graph& g, const Spectrum& spectrum, const Permutation& sigma,
                               const Tolerances& tols) {
  const int n = g.vertex_count();
  if (sigma.degree() != n) throw Error(ErrorKind::DimensionMismatch, "permutation degree differs from vertex count");
  EquivalenceReport report;
  report.s1 = is_automorphism(g, sigma);

  report.s2 = std::all_of(spectrum.pairs.begin(), spectrum.pairs.end(), [&](const Eigenpair& p) {
    Subspace v = p.space;
    v.tol = tols.tol;
    return is_invariant(v, sigma);
  });

  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.adjacency()(i, j);
  const ComplexMatrix p = sigma.matrix();
  const double scale = std::max(1.0, a.frobenius_norm());

  // Common eigenbasis: diagonalize P restricted to each eigenspace of A.
  {
    struct Common {
      ComplexVector x;
      double lambda;
      Complex mu;
    };
    std::vector<Common> common;
    bool ok = true;
    for (const auto& pair : spectrum.pairs) {
      const ComplexMatrix b = pair.space.matrix();
      const ComplexMatrix c = b.adjoint() * p * b;
      const int d = pair.space.dim();
      if ((p * b - b * c).frobenius_norm() > tols.tol * std::sqrt(static_cast<double>(d))) {
        ok = false;
        break;
      }
      for (const auto& es : normal_eig(c, tols.cluster_tol, tols.tol))
        for (const auto& y : es.space.basis) common.push_back({b * y, pair.value, es.value});
    }
    if (ok && static_cast<int>(common.size()) == n) {
      for (std::size_t i = 0; i < common.size() && ok; ++i) {
        const auto& ci = common[i];
        ok = norm(a * ci.x - Complex(ci.lambda) * ci.x) <= tols.tol * scale &&
             norm(p * ci.x - ci.mu * ci.x) <= tols.tol;
        for (std::size_t j = i; j < common.size() && ok; ++j) {
          const Complex expected = i == j ? 1.0 : 0.0;
          ok = std::abs(inner(ci.x, common[j].x) - expected) <= tols.tol;
        }
      }
      report.s3 = ok;
    }
  }

  report.s4 = true;
  for (const auto& es : permutation_eigenspaces(sigma, tols.tol)) {
    for (const auto& x : es.space.basis) {
      const ComplexVector ax = a * x;
      if (norm(ax - es.space.project(ax)) > tols.tol * scale) {
        report.s4 = false;
        break;
      }
    }
    if (!report.s4) break;
  }
  return report;
}

Subspace span_G(const ComplexVector& v, std::span<const Permutation> generators, double tol) {
  const int n = static_cast<int>(v.size());
  for (const auto& g : generators)
    if (g.degree() != n) throw Error(ErrorKind::DimensionMismatch, "generator degree vs vector length");
  Subspace s = Subspace::zero(n, tol);
  s.try_extend(v);
  // Worklist: every adjoined basis vector gets each generator applied once.
  for (int head = 0; head < s.dim(); ++head) {
    const ComplexVector b = s.basis[head];
    for (const auto& g : generators) s.try_extend(act(g, b));
  }
  return s;
}

ComplexMatrix group_average(const ComplexMatrix& m, const PermGroup& group) {
  const int n = group.degree();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "group_average");
  const auto& elements = group.elements();
  ComplexMatrix out(n, n);
  // (P M P^{-1})[sigma(i)][sigma(j)] = M[i][j]
  for (const auto& s : elements)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(s(i), s(j)) += m(i, j);
  return out * Complex(1.0 / static_cast<double>(elements.size()));
}

ComplexMatrix averaged_projection(const Subspace& block, const PermGroup& group) {
  return group_average(projector(block), group);
}

namespace {

void normalize_phase(ComplexMatrix& x) {
  const double fn = x.frobenius_norm();
  Complex pivot = 0.0;
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c)
      if (std::abs(x(r, c)) > std::abs(pivot) * (1.0 + 1e-9)) pivot = x(r, c);
  if (fn == 0.0 || pivot == Complex{}) return;
  x = x * (std::conj(pivot) / std::abs(pivot) / fn);
}

}  // namespace

std::vector<Intertwiner> hom_space(const Subspace& w1, const Subspace& w2, std::span<const Permutation> generators,
                                   double tol) {
  if (!is_invariant(w1, generators) || !is_invariant(w2, generators))
    throw Error(ErrorKind::NotInvariant, "hom_space needs G-invariant subspaces");
  const int d1 = w1.dim();
  const int d2 = w2.dim();
  if (d1 == 0 || d2 == 0) return {};

  // Unknown X is d2 x d1, flattened row-major: X[a][b] -> a * d1 + b.
  const int unknowns = d1 * d2;
  const int eqs_per_gen = d2 * d1;
  const int gens = std::max<int>(1, static_cast<int>(generators.size()));
  ComplexMatrix system(gens * eqs_per_gen, unknowns);
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const ComplexMatrix r1 = block_matrix(w1, generators[gi]);
    const ComplexMatrix r2 = block_matrix(w2, generators[gi]);
    for (int a = 0; a < d2; ++a)
      for (int c = 0; c < d1; ++c) {
        const int row = static_cast<int>(gi) * eqs_per_gen + a * d1 + c;
        for (int b = 0; b < d1; ++b) system(row, a * d1 + b) += r1(b, c);
        for (int e = 0; e < d2; ++e) system(row, e * d1 + c) -= r2(a, e);
      }
  }

  // Each R(sigma) is unitary, so |X R1 - R2 X| is naturally of size |X|.
  const double scale = std::sqrt(static_cast<double>(gens * (d1 + d2)));
  std::vector<Intertwiner> out;
  for (const auto& x : nullspace(system, tol, scale).basis) {
    Intertwiner phi{ComplexMatrix(d2, d1)};
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d1; ++b) phi.matrix(a, b) = x[static_cast<std::size_t>(a) * d1 + b];
    normalize_phase(phi.matrix);
    out.push_back(std::move(phi));
  }
  return out;
}

int commutant_dimension(const Subspace& w, const PermGroup& group) {
  const auto& elements = group.elements();
  double sum = 0.0;
  for (const auto& s : elements) {
    Complex trace = 0.0;
    for (const auto& b : w.basis) trace += inner(act(s, b), b);
    sum += std::norm(trace);
  }
  return static_cast<int>(std::lround(sum / static_cast<double>(elements.size())));
}

bool are_isomorphic(const Subspace& w1, const Subspace& w2, std::span<const Permutation> generators, double tol) {
  if (hom_space(w1, w1, generators, tol).size() != 1 || hom_space(w2, w2, generators, tol).size() != 1)
    throw Error(ErrorKind::NotIrreducible, "are_isomorphic needs irreducible inputs");
  return hom_space(w1, w2, generators, tol).size() == 1;
}

namespace {

constexpr int kMaxSplitAttempts = 5;

class Splitter {
 public:
  Splitter(const PermGroup& group, std::uint64_t seed, const Tolerances& tols)
      : group_(group), gens_(group.generators()), seed_(seed), tols_(tols) {}

  void split(const Subspace& piece) {
    if (piece.dim() == 0) return;
    if (commutant_dimension(piece, group_) == 1) {
      if (hom_space(piece, piece, gens_, tols_.tol).size() != 1)
        throw Error(ErrorKind::DecompositionFailed, "character and intertwiner certificates disagree");
      blocks_.push_back({piece, piece.dim(), -1});
      return;
    }
    const int n = piece.ambient;
    const ComplexMatrix b = piece.matrix();
    for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
      const ComplexMatrix h = random_hermitian(n, derive_seed(seed_, counter_++));
      const ComplexMatrix restricted = b.adjoint() * group_average(h, group_) * b;
      const auto eig = hermitian_eig(restricted);
      const double gap = tols_.cluster_tol * std::max(1.0, restricted.frobenius_norm());

      std::vector<Subspace> parts;
      int start = 0;
      const int d = piece.dim();
      while (start < d) {
        int end = start + 1;
        while (end < d && eig.values[end] - eig.values[end - 1] <= gap) ++end;
        std::vector<ComplexVector> vecs;
        for (int k = start; k < end; ++k) vecs.push_back(b * eig.vectors.column(k));
        parts.push_back(orthonormalize(vecs, tols_.tol, n));
        start = end;
      }
      if (parts.size() < 2) continue;
      const bool all_invariant = std::all_of(parts.begin(), parts.end(), [&](const Subspace& p) {
        return is_invariant(p, std::span<const Permutation>(gens_));
      });
      if (!all_invariant) continue;
      for (const auto& p : parts) split(p);
      return;
    }
    throw Error(ErrorKind::DecompositionFailed,
                "no split of a reducible piece of dimension " + std::to_string(piece.dim()) + " after " +
                    std::to_string(kMaxSplitAttempts) + " samples");
  }

  std::vector<IrreducibleBlock> take() { return std::move(blocks_); }

 private:
  const PermGroup& group_;
  std::span<const Permutation> gens_;
  std::uint64_t seed_;
  Tolerances tols_;
  std::uint64_t counter_ = 0;
  std::vector<IrreducibleBlock> blocks_;
};

}  // namespace

std::vector<IrreducibleBlock> decompose_irreducibles(const Subspace& u, const PermGroup& group, std::uint64_t seed,
                                                     const Tolerances& tols) {
  group.elements();  // NotEnumerated
  Subspace piece = u;
  piece.tol = tols.tol;
  if (!is_invariant(piece, group)) throw Error(ErrorKind::NotInvariant, "decompose_irreducibles needs a G-invariant subspace");
  Splitter splitter(group, seed, tols);
  splitter.split(piece);
  return splitter.take();
}

CanonicalDecomposition canonical_decomposition(const Subspace& ambient, const PermGroup& group, std::uint64_t seed,
                                               const Tolerances& tols) {
  auto blocks = decompose_irreducibles(ambient, group, seed, tols);
  const std::span<const Permutation> gens(group.generators());

  std::vector<std::vector<int>> classes;
  for (int k = 0; k < static_cast<int>(blocks.size()); ++k) {
    bool placed = false;
    for (auto& cls : classes) {
      const auto& rep = blocks[cls.front()];
      if (rep.dim != blocks[k].dim) continue;
      if (hom_space(rep.basis, blocks[k].basis, gens, tols.tol).size() == 1) {
        cls.push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({k});
  }
  std::stable_sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
    return blocks[x.front()].dim < blocks[y.front()].dim;
  });

  CanonicalDecomposition cd;
  cd.ambient = ambient;
  cd.ambient.tol = tols.tol;
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    IsotypicComponent comp;
    comp.iso_class = c;
    std::vector<ComplexVector> all;
    for (int k : classes[c]) {
      blocks[k].iso_class = c;
      all.insert(all.end(), blocks[k].basis.basis.begin(), blocks[k].basis.basis.end());
      comp.blocks.push_back(blocks[k]);
    }
    comp.d = comp.blocks.front().dim;
    comp.m = static_cast<int>(comp.blocks.size());
    comp.total = orthonormalize(all, tols.tol, ambient.ambient);
    if (comp.total.dim() != comp.d * comp.m)
      throw Error(ErrorKind::DecompositionFailed, "blocks of an isotypic component are not independent");
    cd.components.push_back(std::move(comp));
  }
  return cd;
}

CrossSeedReport cross_seed_check(const Subspace& ambient, const PermGroup& group, std::span<const std::uint64_t> seeds,
                                 const Tolerances& tols, double angle_tol) {
  CrossSeedReport report;
  report.seeds.assign(seeds.begin(), seeds.end());
  report.agrees = true;
  if (seeds.empty()) return report;

  const auto reference = canonical_decomposition(ambient, group, seeds.front(), tols);
  for (std::size_t s = 1; s < seeds.size(); ++s) {
    const auto other = canonical_decomposition(ambient, group, seeds[s], tols);
    if (other.h() != reference.h()) {
      report.agrees = false;
      continue;
    }
    std::vector<bool> taken(other.components.size(), false);
    for (const auto& comp : reference.components) {
      int match = -1;
      double best = std::numbers::pi / 2;
      for (std::size_t k = 0; k < other.components.size(); ++k) {
        const auto& cand = other.components[k];
        if (taken[k] || cand.d != comp.d || cand.m != comp.m) continue;
        const double angle = max_principal_angle(comp.total, cand.total);
        if (angle < best) {
          best = angle;
          match = static_cast<int>(k);
        }
      }
      if (match < 0 || best > angle_tol) {
        report.agrees = false;
        report.max_angle = std::max(report.max_angle, best);
        continue;
      }
      taken[match] = true;
      report.max_angle = std::max(report.max_angle, best);
    }
  }
  return report;
}

}  // namespace eigensym
