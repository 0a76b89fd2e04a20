#include "eigensym/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "eigensym/error.hpp"

namespace eigensym {

int AdjacencyMatrix::degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j) d += (*this)(i, j);
  return d;
}

std::vector<double> AdjacencyMatrix::to_real() const {
  return std::vector<double>(data_.begin(), data_.end());
}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), adjacency_(n > 0 ? n : 0) {
  if (n <= 0) throw Error(ErrorKind::BadParameter, "vertex count must be positive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw Error(ErrorKind::BadParameter, "label count does not match vertex count");
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::EndpointOutOfRange,
                  "edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
    if (a == b) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(ErrorKind::DuplicateEdge,
                std::to_string(dup->first + 1) + " " + std::to_string(dup->second + 1));

  degrees_.assign(n, 0);
  neighbors_.assign(n, {});
  for (auto [a, b] : edges_) {
    adjacency_.set(a, b, 1);
    adjacency_.set(b, a, 1);
    ++degrees_[a];
    ++degrees_[b];
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto where = "line " + std::to_string(line_no) + ": '" + std::string(line) + "'";
    auto tokens = split_ws(line);
    if (n < 0) {
      long long count = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_int(tokens[1], count) || count <= 0 ||
          count > 100000)
        throw Error(ErrorKind::MalformedLine, where + " (expected 'n <count>')");
      n = static_cast<int>(count);
      continue;
    }
    long long a = 0, b = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b))
      throw Error(ErrorKind::MalformedLine, where);
    if (a < 1 || a > n || b < 1 || b > n) throw Error(ErrorKind::EndpointOutOfRange, where);
    edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (n < 0) throw Error(ErrorKind::MalformedLine, "missing 'n <count>' header");
  return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (auto [a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorKind::MalformedLine, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126)
      throw Error(ErrorKind::BadChecksumChar,
                  "byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
  }
  int n = text[0] - 63;
  if (n == 63) throw Error(ErrorKind::LengthMismatch, "long-form graph6 (n > 62) not supported");
  if (n == 0) throw Error(ErrorKind::MalformedLine, "graph6 string encodes zero vertices");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected)
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(expected) +
                                               " bytes, got " + std::to_string(text.size()));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw Error(ErrorKind::LengthMismatch, "graph6 short form requires n <= 62");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
    }
  }
  for (char& c : out) c = static_cast<char>(c + 63);
  return out;
}

AdjacencyMatrix adjacency_matrix(const Graph& g) { return g.adjacency(); }

namespace {

Graph petersen() {
  // Outer 5-cycle 1-2-3-4-5, spokes i -- i+5, inner pentagram 6-8-10-7-9.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  // Two vertices are adjacent iff their 2-subsets of {1..5} are disjoint.
  std::vector<std::string> labels = {"{1,2}", "{3,4}", "{1,5}", "{2,3}", "{4,5}",
                                     "{3,5}", "{2,5}", "{2,4}", "{1,4}", "{1,3}"};
  return Graph(10, std::move(edges), std::move(labels));
}

void require(bool ok, std::string_view family, int k) {
  if (!ok)
    throw Error(ErrorKind::BadParameter,
                "invalid size " + std::to_string(k) + " for family '" + std::string(family) + "'");
}

}  // namespace

Graph builtin(std::string_view name, int k) {
  if (name == "petersen") return petersen();
  std::vector<Edge> edges;
  if (name == "path") {
    require(k >= 1, name, k);
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, std::move(edges));
  }
  if (name == "cycle") {
    require(k >= 3, name, k);
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(edges));
  }
  if (name == "complete") {
    require(k >= 1, name, k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
  }
  if (name == "empty") {
    require(k >= 1, name, k);
    return Graph(k, {});
  }
  if (name == "disjoint_edges") {
    require(k >= 1, name, k);
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * k, std::move(edges));
  }
  throw Error(ErrorKind::UnknownFamily, std::string(name));
}

}  // namespace eigensym
