#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eigensym {

/// Undirected edge between two vertices, stored 0-based with first < second.
using Edge = std::pair<int, int>;

/// Dense 0/1 adjacency matrix. Entries are exact integers so automorphism
/// tests never need a tolerance.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  std::uint8_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, std::uint8_t value) { data_[static_cast<std::size_t>(i) * n_ + j] = value; }

  int degree(int i) const;
  /// Row-major copy as doubles, for the eigensolver.
  std::vector<double> to_real() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> data_;
};

/// Simple undirected graph. Vertices are 0-based internally; the parsers and
/// serializers translate from and to the 1-based external numbering.
class Graph {
 public:
  /// Validates and canonicalizes the edge set (sorted, endpoints ordered).
  /// Edges are 0-based. Throws Error on self-loops, duplicates or bad endpoints.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  bool adjacent(int i, int j) const { return adjacency_(i, j) != 0; }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& neighbors(int i) const { return neighbors_[i]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  AdjacencyMatrix adjacency_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> neighbors_;
};

/// Parses the edge-list format: a header line "n <count>" followed by one
/// "i j" pair per line, 1-based. '#' starts a comment; blank lines are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Short-form graph6 (n <= 62).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

AdjacencyMatrix adjacency_matrix(const Graph& g);

/// Named graph families: petersen, path, cycle, complete, empty,
/// disjoint_edges. `k` is the size parameter and is ignored for petersen.
Graph builtin(std::string_view name, int k);

}  // namespace eigensym
