#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigensym/graph.hpp"
#include "eigensym/linalg.hpp"

namespace eigensym {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Bijection on {0, ..., n-1}; printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PointOutOfRange or RepeatedPoint unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Disjoint cycles, 1-based, fixed points omitted; identity prints "()".
  std::string to_cycles() const;
  /// Matrix of the vector action: P e_i = e_{sigma(i)}.
  ComplexMatrix matrix() const;
  /// Cycles as 0-based point lists, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;

  /// Composition, (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses disjoint-cycle notation such as "(1,4,2,5,3)(6,9,7,10,8)";
/// unlisted points are fixed. "()" and "" denote the identity.
Permutation parse_cycles(std::string_view text, int n);

/// (sigma v)_i = v_{sigma^{-1}(i)}.
ComplexVector act(const Permutation& sigma, const ComplexVector& v);

/// Exact check that A[sigma(i)][sigma(j)] = A[i][j] for all i, j.
bool is_automorphism(const Graph& g, const Permutation& sigma);

/// A permutation group given by generators, optionally with the full element
/// list (kept sorted lexicographically by images).
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool enumerated() const { return elements_.has_value(); }
  /// Throws NotEnumerated when the group was built from generators only.
  const std::vector<Permutation>& elements() const;
  std::optional<std::uint64_t> order() const;
  /// Requires an enumerated group.
  bool contains(const Permutation& p) const;

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::optional<std::vector<Permutation>> elements_;
};

/// Enumerates Aut(g) by backtracking over vertex images with degree and
/// partial-adjacency pruning. Throws CapExceeded past `cap` elements.
PermGroup automorphism_group(const Graph& g, std::uint64_t cap = kDefaultCap);

/// Breadth-first product closure of the generators.
PermGroup closure(int degree, std::span<const Permutation> generators, std::uint64_t cap = kDefaultCap);

/// Greedy generating set: walks `elements` in order and keeps each element
/// not already in the closure of the ones kept so far.
std::vector<Permutation> extract_generators(int degree, std::span<const Permutation> elements);

struct OrbitStabilizerChain {
  std::vector<int> base;                    // 0-based
  std::vector<std::uint64_t> orbit_sizes;   // |b_k^{G_{b_1..b_{k-1}}}|
  std::uint64_t final_stabilizer = 1;       // |G_{b_1..b_m}|

  std::uint64_t order() const;
  /// e.g. "10·3·2·2"; the final stabilizer is appended only when nontrivial.
  std::string factorization() const;
};

OrbitStabilizerChain orbit_stabilizer_chain(const PermGroup& group, std::span<const int> base);
OrbitStabilizerChain orbit_stabilizer_order(const Graph& g, std::span<const int> base,
                                            std::uint64_t cap = kDefaultCap);

/// Base that runs until the stabilizer is trivial; each step takes the
/// smallest moved vertex adjacent to an earlier base point, falling back to
/// the smallest moved vertex.
std::vector<int> default_base(const Graph& g, const PermGroup& group);

struct LineStabilizer {
  PermGroup subgroup;
  std::uint64_t index;
};

/// G[v] = { sigma : sigma v is collinear with v } and its index in G.
LineStabilizer line_stabilizer(const PermGroup& group, const ComplexVector& v, double tol = kDefaultTol);

/// Uniformly random permutation (Fisher-Yates driven by the seeded generator).
Permutation random_permutation(int n, std::uint64_t seed);

}  // namespace eigensym
