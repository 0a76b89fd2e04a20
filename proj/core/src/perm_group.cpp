#include "eigensym/perm_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "eigensym/error.hpp"
#include "eigensym/rng.hpp"

namespace eigensym {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int x : images_) {
    if (x < 0 || x >= n) throw Error(ErrorKind::PointOutOfRange, "image " + std::to_string(x + 1));
    if (seen[x]) throw Error(ErrorKind::RepeatedPoint, "image " + std::to_string(x + 1));
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) out << (k ? "," : "") << cycle[k] + 1;
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

ComplexMatrix Permutation::matrix() const {
  ComplexMatrix p(degree(), degree());
  for (int i = 0; i < degree(); ++i) p(images_[i], i) = 1.0;
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::DimensionMismatch, "composing permutations of different degree");
  std::vector<int> images(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) images[i] = a.images_[b.images_[i]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int x : p.images()) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_cycles(std::string_view text, int n) {
  if (n <= 0) throw Error(ErrorKind::BadParameter, "degree must be positive");
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<bool> seen(n, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto malformed = [&](const std::string& why) {
    return Error(ErrorKind::MalformedLine, "cycle notation '" + std::string(text) + "': " + why);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw malformed("expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      long long point = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), point);
      if (ec != std::errc{}) throw malformed("expected a point");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (point < 1 || point > n)
        throw Error(ErrorKind::PointOutOfRange, std::to_string(point) + " not in [1, " + std::to_string(n) + "]");
      const int p = static_cast<int>(point - 1);
      if (seen[p]) throw Error(ErrorKind::RepeatedPoint, std::to_string(point));
      seen[p] = true;
      cycle.push_back(p);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw malformed("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

ComplexVector act(const Permutation& sigma, const ComplexVector& v) {
  if (static_cast<int>(v.size()) != sigma.degree())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from permutation degree");
  ComplexVector out(v.size());
  for (int i = 0; i < sigma.degree(); ++i) out[sigma(i)] = v[i];
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& sigma) {
  const int n = g.vertex_count();
  if (sigma.degree() != n) throw Error(ErrorKind::DimensionMismatch, "permutation degree differs from vertex count");
  const auto& a = g.adjacency();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(sigma(i), sigma(j)) != a(i, j)) return false;
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(ErrorKind::DimensionMismatch, "generator degree");
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : PermGroup(degree, std::move(generators)) {
  std::sort(elements.begin(), elements.end());
  elements_ = std::move(elements);
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) throw Error(ErrorKind::NotEnumerated, "group is known only by generators");
  return *elements_;
}

std::optional<std::uint64_t> PermGroup::order() const {
  if (!elements_) return std::nullopt;
  return elements_->size();
}

bool PermGroup::contains(const Permutation& p) const {
  const auto& el = elements();
  return std::binary_search(el.begin(), el.end(), p);
}

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

// BFS closure; the returned elements are in discovery order.
std::vector<Permutation> bfs_closure(int degree, std::span<const Permutation> generators, std::uint64_t cap) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  PermSet seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap)
          throw Error(ErrorKind::CapExceeded, "group closure exceeds cap " + std::to_string(cap));
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace

PermGroup closure(int degree, std::span<const Permutation> generators, std::uint64_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(ErrorKind::DimensionMismatch, "generator degree");
  auto elements = bfs_closure(degree, generators, cap);
  return PermGroup(degree, std::vector<Permutation>(generators.begin(), generators.end()), std::move(elements));
}

std::vector<Permutation> extract_generators(int degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermSet reached{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (reached.contains(e)) continue;
    gens.push_back(e);
    auto grown = bfs_closure(degree, gens, elements.size() + 1);
    reached = PermSet(grown.begin(), grown.end());
  }
  return gens;
}

PermGroup automorphism_group(const Graph& g, std::uint64_t cap) {
  const int n = g.vertex_count();
  std::vector<Permutation> found;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  // Candidates grouped by degree class, ascending id within the class.
  std::vector<std::vector<int>> by_degree(n);
  for (int w = 0; w < n; ++w) by_degree[g.degree(w)].push_back(w);

  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (found.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "automorphism group exceeds cap " + std::to_string(cap));
      found.emplace_back(image);
      return;
    }
    for (int w : by_degree[g.degree(v)]) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
      image[v] = -1;
    }
  };
  extend(extend, 0);

  auto gens = extract_generators(n, found);
  return PermGroup(n, std::move(gens), std::move(found));
}

std::uint64_t OrbitStabilizerChain::order() const {
  std::uint64_t o = final_stabilizer;
  for (auto s : orbit_sizes) o *= s;
  return o;
}

std::string OrbitStabilizerChain::factorization() const {
  std::vector<std::uint64_t> factors = orbit_sizes;
  if (final_stabilizer != 1 || factors.empty()) factors.push_back(final_stabilizer);
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "·" : "") + std::to_string(factors[k]);
  return out;
}

OrbitStabilizerChain orbit_stabilizer_chain(const PermGroup& group, std::span<const int> base) {
  OrbitStabilizerChain chain;
  chain.base.assign(base.begin(), base.end());
  std::vector<Permutation> current = group.elements();
  for (int b : base) {
    if (b < 0 || b >= group.degree()) throw Error(ErrorKind::PointOutOfRange, "base point " + std::to_string(b + 1));
    std::vector<bool> orbit(group.degree(), false);
    std::vector<Permutation> stabilizer;
    for (const auto& s : current) {
      orbit[s(b)] = true;
      if (s(b) == b) stabilizer.push_back(s);
    }
    chain.orbit_sizes.push_back(static_cast<std::uint64_t>(std::count(orbit.begin(), orbit.end(), true)));
    current = std::move(stabilizer);
  }
  chain.final_stabilizer = current.size();
  return chain;
}

OrbitStabilizerChain orbit_stabilizer_order(const Graph& g, std::span<const int> base, std::uint64_t cap) {
  return orbit_stabilizer_chain(automorphism_group(g, cap), base);
}

std::vector<int> default_base(const Graph& g, const PermGroup& group) {
  std::vector<int> base;
  std::vector<Permutation> current = group.elements();
  const int n = group.degree();
  while (current.size() > 1) {
    std::vector<bool> moved(n, false);
    for (const auto& s : current)
      for (int i = 0; i < n; ++i)
        if (s(i) != i) moved[i] = true;
    int next = -1;
    for (int i = 0; i < n && next < 0; ++i) {
      if (!moved[i]) continue;
      for (int b : base)
        if (g.adjacent(b, i)) next = i;
    }
    if (next < 0) next = static_cast<int>(std::find(moved.begin(), moved.end(), true) - moved.begin());
    base.push_back(next);
    std::erase_if(current, [next](const Permutation& s) { return s(next) != next; });
  }
  return base;
}

LineStabilizer line_stabilizer(const PermGroup& group, const ComplexVector& v, double tol) {
  const auto& elements = group.elements();
  if (static_cast<int>(v.size()) != group.degree())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from group degree");
  const double vn = norm(v);
  const double vv = vn * vn;

  std::vector<Permutation> members;
  for (const auto& s : elements) {
    if (vn == 0.0) {
      members.push_back(s);
      continue;
    }
    const ComplexVector w = act(s, v);
    const Complex c = inner(w, v) / vv;
    if (norm(w - c * v) <= tol * vn) members.push_back(s);
  }

  // With gens extracted from `members`, closure of members under right
  // multiplication by gens certifies that members is a subgroup.
  auto gens = extract_generators(group.degree(), members);
  PermGroup subgroup(group.degree(), gens, members);
  for (const auto& m : subgroup.elements())
    for (const auto& s : gens)
      if (!subgroup.contains(s * m))
        throw Error(ErrorKind::Internal, "line stabilizer is not closed under composition");
  if (!subgroup.contains(Permutation::identity(group.degree())))
    throw Error(ErrorKind::Internal, "line stabilizer misses the identity");

  const std::uint64_t index = elements.size() / members.size();
  return LineStabilizer{std::move(subgroup), index};
}

Permutation random_permutation(int n, std::uint64_t seed) {
  Xorshift64Star rng(seed);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(images[i], images[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(images));
}

}  // namespace eigensym
