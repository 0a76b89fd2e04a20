#include "commands.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eigensym/error.hpp"
#include "eigensym/graph.hpp"
#include "eigensym/linalg.hpp"
#include "eigensym/perm_group.hpp"
#include "eigensym/representation.hpp"
#include "eigensym/rng.hpp"
#include "eigensym/span_analysis.hpp"

namespace eigensym::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised for failures that are not a core Error but map to a fixed exit code.
struct Exit {
  int code;
  std::string message;
};

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine:
    case ErrorKind::EndpointOutOfRange:
    case ErrorKind::SelfLoop:
    case ErrorKind::DuplicateEdge:
    case ErrorKind::BadChecksumChar:
    case ErrorKind::LengthMismatch:
    case ErrorKind::UnknownFamily:
    case ErrorKind::BadParameter:
    case ErrorKind::RepeatedPoint:
    case ErrorKind::PointOutOfRange:
    case ErrorKind::DimensionMismatch:
      return kParseError;
    case ErrorKind::CapExceeded:
      return kCapExceeded;
    case ErrorKind::NoConvergence:
      return kNoConvergence;
    case ErrorKind::DecompositionFailed:
    case ErrorKind::NotIrreducible:
    case ErrorKind::MissingIntertwiner:
      return kDecompositionFailed;
    case ErrorKind::ConstructionFailed:
      return kDisagreement;
    default:
      return kOther;
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kParseError, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 is a single token of printable bytes; anything with an "n" header
// is an edge list.
Graph load_graph(const RunConfig& cfg, std::string& name) {
  if (!cfg.builtin.empty()) {
    name = cfg.builtin;
    if (cfg.builtin != "petersen") name += " " + std::to_string(cfg.builtin_size);
    return builtin(cfg.builtin, cfg.builtin_size);
  }
  name = cfg.input_path;
  const std::string text = read_file(cfg.input_path);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line[first] == 'n' && line.size() > first + 1 && (line[first + 1] == ' ' || line[first + 1] == '\t'))
      return parse_edge_list(text);
    return parse_graph6(line);
  }
  throw Error(ErrorKind::MalformedLine, "input file holds no graph");
}

std::vector<Permutation> parse_group_generators(const std::string& text, int n) {
  std::vector<Permutation> gens;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(parse_cycles(part, n));
  }
  return gens;
}

struct Context {
  const RunConfig& cfg;
  std::string name;
  Graph graph;
  Tolerances tols;

  explicit Context(const RunConfig& c) : cfg(c), graph(load_graph(c, name)), tols{c.tol, c.cluster_tol} {}

  int n() const { return graph.vertex_count(); }

  // Full automorphism group, or the closure of --group after checking that
  // every generator preserves the graph.
  PermGroup group() const {
    if (cfg.group.empty()) return automorphism_group(graph, cfg.cap);
    const auto gens = parse_group_generators(cfg.group, n());
    for (const auto& s : gens)
      if (!is_automorphism(graph, s))
        throw Exit{kParseError, "--group generator " + s.to_cycles() + " is not an automorphism"};
    return closure(n(), gens, cfg.cap);
  }

  Json header() const {
    Json j;
    j["schema_version"] = kJsonSchemaVersion;
    j["command"] = cfg.command;
    j["graph"] = {{"source", name}, {"vertices", n()}, {"edges", graph.edges().size()}};
    j["config"] = {{"seed", cfg.seed},
                   {"tol", cfg.tol},
                   {"cluster_tol", cfg.cluster_tol},
                   {"cap", cfg.cap},
                   {"group", cfg.group.empty() ? Json("automorphism") : Json(cfg.group)}};
    return j;
  }
};

std::string num(double x, int precision = 6) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -precision)) x = 0.0;
  std::ostringstream ss;
  ss << std::setprecision(precision) << x;
  return ss.str();
}

std::string complex_str(Complex z) {
  std::ostringstream ss;
  ss << num(z.real());
  const double im = std::abs(z.imag()) < 5e-7 ? 0.0 : z.imag();
  if (im != 0.0) ss << (im < 0 ? " - " : " + ") << num(std::abs(im)) << "i";
  return ss.str();
}

Json vector_json(const ComplexVector& v) {
  Json arr = Json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

std::string vector_str(const ComplexVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + complex_str(v[i]);
  return s + "]";
}

std::string join_cycles(const std::vector<Permutation>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : " ") + g.to_cycles();
  return s.empty() ? "()" : s;
}

Json generators_json(const PermGroup& group) {
  Json arr = Json::array();
  for (const auto& g : group.generators()) arr.push_back(g.to_cycles());
  return arr;
}

// ---------------------------------------------------------------- aut

int cmd_aut(const Context& ctx, std::ostream& out) {
  const PermGroup group = ctx.group();
  std::vector<int> base;
  if (ctx.cfg.base.empty()) {
    base = default_base(ctx.graph, group);
  } else {
    for (int b : ctx.cfg.base) base.push_back(b - 1);
  }
  const auto chain = orbit_stabilizer_chain(group, base);
  const std::uint64_t order = *group.order();
  if (chain.order() != order) throw Exit{kOther, "orbit-stabilizer product disagrees with enumeration"};

  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    std::vector<int> base1;
    for (int b : chain.base) base1.push_back(b + 1);
    j["order"] = order;
    j["generators"] = generators_json(group);
    j["orbit_stabilizer"] = {{"base", base1},
                             {"orbit_sizes", chain.orbit_sizes},
                             {"final_stabilizer", chain.final_stabilizer},
                             {"factorization", chain.factorization()}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << ctx.name << " (n=" << ctx.n() << ", edges=" << ctx.graph.edges().size() << ")\n";
  out << "order: " << order << '\n';
  out << "generators:";
  for (const auto& g : group.generators()) out << ' ' << g.to_cycles();
  if (group.generators().empty()) out << " ()";
  out << '\n';
  out << "base:";
  for (int b : chain.base) out << ' ' << b + 1;
  out << '\n';
  out << "orbit-stabilizer: " << chain.factorization() << " = " << chain.order() << '\n';
  return kOk;
}

// ---------------------------------------------------------------- spectrum

double eigen_residual(const Graph& g, const Eigenpair& p) {
  double worst = 0.0;
  const auto& a = g.adjacency();
  const int n = g.vertex_count();
  for (const auto& v : p.space.basis) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex s = -p.value * v[i];
      for (int j = 0; j < n; ++j)
        if (a(i, j)) s += v[j];
      r2 += std::norm(s);
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  return worst;
}

int cmd_spectrum(const Context& ctx, std::ostream& out) {
  const Spectrum spec = symmetric_eig(ctx.graph.adjacency(), ctx.cfg.cluster_tol);
  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    Json eig = Json::array();
    for (const auto& p : spec.pairs)
      eig.push_back({{"value", p.value}, {"multiplicity", p.space.dim()}, {"residual", eigen_residual(ctx.graph, p)}});
    j["eigenvalues"] = eig;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << ctx.name << " (n=" << ctx.n() << ")\n";
  out << std::left << std::setw(16) << "eigenvalue" << std::setw(14) << "multiplicity" << "residual\n";
  for (const auto& p : spec.pairs) {
    std::ostringstream res;
    res << std::scientific << std::setprecision(2) << eigen_residual(ctx.graph, p);
    out << std::left << std::setw(16) << num(p.value, 10) << std::setw(14) << p.space.dim() << res.str() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- decompose

struct Certified {
  CanonicalDecomposition cd;
  std::vector<std::vector<int>> hom_dims;        // per component, per block
  std::vector<std::vector<int>> commutant_dims;  // character formula, -1 if not enumerated
};

Certified certify(const Subspace& ambient, const PermGroup& group, const Context& ctx) {
  Certified c{canonical_decomposition(ambient, group, ctx.cfg.seed, ctx.tols), {}, {}};
  for (const auto& comp : c.cd.components) {
    std::vector<int> hom;
    std::vector<int> chi;
    for (const auto& b : comp.blocks) {
      hom.push_back(static_cast<int>(hom_space(b.basis, b.basis, group.generators(), ctx.cfg.tol).size()));
      chi.push_back(group.enumerated() ? commutant_dimension(b.basis, group) : -1);
    }
    c.hom_dims.push_back(std::move(hom));
    c.commutant_dims.push_back(std::move(chi));
  }
  return c;
}

bool all_certified(const Certified& c) {
  for (std::size_t i = 0; i < c.hom_dims.size(); ++i)
    for (std::size_t j = 0; j < c.hom_dims[i].size(); ++j)
      if (c.hom_dims[i][j] != 1 || (c.commutant_dims[i][j] != -1 && c.commutant_dims[i][j] != 1)) return false;
  return true;
}

// Eigenvalues whose eigenspace meets the component.
std::vector<double> overlapping_eigenvalues(const Subspace& total, const Spectrum& spec) {
  std::vector<double> out;
  for (const auto& p : spec.pairs) {
    double overlap = 0.0;
    for (const auto& b : total.basis) overlap = std::max(overlap, norm(p.space.project(b)));
    if (overlap > 1e-6) out.push_back(p.value);
  }
  return out;
}

Json components_json(const Certified& c, const Spectrum* spec = nullptr) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < c.cd.components.size(); ++i) {
    const auto& comp = c.cd.components[i];
    Json blocks = Json::array();
    for (std::size_t b = 0; b < comp.blocks.size(); ++b) {
      blocks.push_back({{"dim", comp.blocks[b].dim},
                        {"hom_dim", c.hom_dims[i][b]},
                        {"commutant_dim", c.commutant_dims[i][b]}});
    }
    Json entry = {{"iso_class", comp.iso_class}, {"d", comp.d}, {"m", comp.m}, {"blocks", blocks}};
    if (spec) entry["eigenvalues"] = overlapping_eigenvalues(comp.total, *spec);
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::vector<std::uint64_t> cross_seeds(std::uint64_t seed) { return {seed, seed + 1, seed + 2}; }

void print_components(std::ostream& out, const Certified& c, const std::string& indent,
                      const Spectrum* spec = nullptr) {
  out << indent << std::left << std::setw(11) << "iso_class" << std::setw(5) << "d" << std::setw(5) << "m"
      << std::setw(14) << "dim Hom(W,W)" << (spec ? "eigenvalues" : "") << '\n';
  for (std::size_t i = 0; i < c.cd.components.size(); ++i) {
    const auto& comp = c.cd.components[i];
    std::string homs;
    for (int h : c.hom_dims[i]) homs += (homs.empty() ? "" : ",") + std::to_string(h);
    out << indent << std::left << std::setw(11) << comp.iso_class << std::setw(5) << comp.d << std::setw(5) << comp.m
        << std::setw(14) << homs;
    if (spec) {
      std::string values;
      for (double v : overlapping_eigenvalues(comp.total, *spec)) values += (values.empty() ? "" : ",") + num(v, 10);
      out << values;
    }
    out << '\n';
  }
}

int cmd_decompose(const Context& ctx, std::ostream& out) {
  const PermGroup group = ctx.group();
  const Spectrum spec = symmetric_eig(ctx.graph.adjacency(), ctx.cfg.cluster_tol);
  const auto seeds = cross_seeds(ctx.cfg.seed);

  struct PerEigen {
    double value;
    Certified cert;
    CrossSeedReport cross;
  };
  std::vector<PerEigen> per;
  for (const auto& p : spec.pairs) {
    Subspace space = p.space;
    space.tol = ctx.cfg.tol;
    per.push_back({p.value, certify(space, group, ctx), cross_seed_check(space, group, seeds, ctx.tols)});
  }
  const Certified global = certify(Subspace::full(ctx.n(), ctx.cfg.tol), group, ctx);
  const CrossSeedReport global_cross = cross_seed_check(Subspace::full(ctx.n(), ctx.cfg.tol), group, seeds, ctx.tols);

  bool certified = all_certified(global);
  for (const auto& e : per) certified = certified && all_certified(e.cert);

  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    j["group"] = {{"order", group.order() ? Json(*group.order()) : Json(nullptr)},
                  {"generators", generators_json(group)}};
    Json eig = Json::array();
    for (const auto& e : per) {
      eig.push_back({{"eigenvalue", e.value},
                     {"dim", e.cert.cd.ambient.dim()},
                     {"irreducible", e.cert.cd.h() == 1 && e.cert.cd.components[0].m == 1},
                     {"components", components_json(e.cert)},
                     {"cross_seed", {{"agrees", e.cross.agrees}, {"max_angle", e.cross.max_angle}}}});
    }
    j["eigenspaces"] = eig;
    j["global"] = {{"components", components_json(global, &spec)},
                   {"cross_seed",
                    {{"seeds", seeds}, {"agrees", global_cross.agrees}, {"max_angle", global_cross.max_angle}}}};
    j["certified"] = certified;
    out << j.dump(2) << '\n';
  } else {
    out << "graph: " << ctx.name << " (n=" << ctx.n() << "), group order "
        << (group.order() ? std::to_string(*group.order()) : std::string("?")) << '\n';
    for (const auto& e : per) {
      const bool irreducible = e.cert.cd.h() == 1 && e.cert.cd.components[0].m == 1;
      out << "eigenspace " << num(e.value, 10) << " (dim " << e.cert.cd.ambient.dim() << ")"
          << (irreducible ? ", irreducible" : "") << (e.cross.agrees ? "" : ", CROSS-SEED MISMATCH") << '\n';
      print_components(out, e.cert, "  ");
    }
    out << "global decomposition of C^" << ctx.n() << ":\n";
    print_components(out, global, "  ", &spec);
    out << "cross-seed check (seeds " << seeds[0] << "," << seeds[1] << "," << seeds[2]
        << "): " << (global_cross.agrees ? "agree" : "DISAGREE") << ", max angle " << std::scientific
        << std::setprecision(2) << global_cross.max_angle << std::defaultfloat << '\n';
    out << "irreducibility certificates: " << (certified ? "all pass" : "FAILED") << '\n';
  }
  return certified ? kOk : kDecompositionFailed;
}

// ---------------------------------------------------------------- span

ComplexVector read_vector(const std::string& path, int n) {
  const std::string text = read_file(path);
  std::istringstream lines(text);
  std::string line;
  ComplexVector v;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double re = 0.0;
    if (!(ls >> re)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error(ErrorKind::MalformedLine, "bad vector entry '" + line + "'");
      continue;
    }
    double im = 0.0;
    if (!(ls >> im)) im = 0.0;
    std::string extra;
    if (ls >> extra) throw Error(ErrorKind::MalformedLine, "bad vector entry '" + line + "'");
    v.emplace_back(re, im);
  }
  if (static_cast<int>(v.size()) != n)
    throw Error(ErrorKind::DimensionMismatch,
                "vector has " + std::to_string(v.size()) + " entries, graph has " + std::to_string(n) + " vertices");
  return v;
}

const Eigenpair& find_eigenspace(const Spectrum& spec, double lambda, double cluster_tol) {
  for (const auto& p : spec.pairs)
    if (std::abs(p.value - lambda) <= std::max(cluster_tol, 1e-6) * std::max(1.0, std::abs(lambda))) return p;
  throw Error(ErrorKind::BadParameter, "no eigenvalue near " + num(lambda, 10));
}

int cmd_span(const Context& ctx, std::ostream& out) {
  const PermGroup group = ctx.group();
  ComplexVector v;
  std::string source;
  if (!ctx.cfg.vector_path.empty()) {
    v = read_vector(ctx.cfg.vector_path, ctx.n());
    source = "file " + ctx.cfg.vector_path;
  } else if (ctx.cfg.ones) {
    v.assign(ctx.n(), 1.0);
    source = "ones";
  } else if (ctx.cfg.eigen) {
    const Spectrum spec = symmetric_eig(ctx.graph.adjacency(), ctx.cfg.cluster_tol);
    const auto& p = find_eigenspace(spec, *ctx.cfg.eigen, ctx.cfg.cluster_tol);
    v = p.space.lift(random_vector(p.space.dim(), ctx.cfg.seed));
    source = "random in eigenspace " + num(p.value, 10);
  } else {
    v = random_vector(ctx.n(), ctx.cfg.seed);
    source = "random";
  }

  const auto cd = canonical_decomposition(Subspace::full(ctx.n(), ctx.cfg.tol), group, ctx.cfg.seed, ctx.tols);
  const auto psi = reference_intertwiners(cd, group.generators(), ctx.cfg.tol);
  const SpanReport r = dim_span_formula(v, cd, psi, group, ctx.cfg.tol);
  const bool ok = r.agrees && r.index_bound_holds;

  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    j["vector_source"] = source;
    j["vector"] = vector_json(v);
    j["dim_closure"] = r.dim_closure;
    j["dim_formula"] = r.dim_formula;
    j["agrees"] = r.agrees;
    Json comps = Json::array();
    for (const auto& c : r.per_component) comps.push_back({{"iso_class", c.iso_class}, {"d", c.d}, {"m", c.m}, {"n", c.n}});
    j["per_component"] = comps;
    j["index_bound"] = r.index_bound ? Json(*r.index_bound) : Json(nullptr);
    j["index_bound_holds"] = r.index_bound_holds;
    j["index_bound_equal"] = r.index_bound_equal;
    out << j.dump(2) << '\n';
  } else {
    out << "graph: " << ctx.name << " (n=" << ctx.n() << "), vector: " << source << '\n';
    out << std::left << std::setw(11) << "iso_class" << std::setw(5) << "d" << std::setw(5) << "m" << "n\n";
    for (const auto& c : r.per_component)
      out << std::left << std::setw(11) << c.iso_class << std::setw(5) << c.d << std::setw(5) << c.m << c.n << '\n';
    out << "dim span(Gv): formula " << r.dim_formula << ", closure " << r.dim_closure
        << (r.agrees ? " (agree)" : " (DISAGREE)") << '\n';
    if (r.index_bound) {
      out << "index bound [G:G[v]] = " << *r.index_bound << (r.index_bound_equal ? " (equality)" : "")
          << (r.index_bound_holds ? "" : " VIOLATED") << '\n';
    }
  }
  return ok ? kOk : kDisagreement;
}

// ---------------------------------------------------------------- extremal

Json extremal_json(const ExtremalReport& r) {
  Json capped = Json::array();
  for (int c : r.asymmetric.capped_components) capped.push_back(c);
  return {{"ambient_dim", r.ambient_dim},
          {"symmetric_dim", r.symmetric.dim},
          {"symmetric_closure_dim", r.symmetric_closure_dim},
          {"symmetric_vector", vector_json(r.symmetric.vector)},
          {"asymmetric_dim", r.asymmetric.dim},
          {"asymmetric_vector", vector_json(r.asymmetric.vector)},
          {"max_value", r.max_value},
          {"capped_components", capped}};
}

void print_extremal(std::ostream& out, const ExtremalReport& r) {
  out << "  symmetric:  dim " << r.symmetric.dim << "  " << vector_str(r.symmetric.vector) << '\n';
  out << "  asymmetric: dim " << r.asymmetric.dim << "  " << vector_str(r.asymmetric.vector) << '\n';
  out << "  max span " << r.max_value << " of " << r.ambient_dim;
  if (!r.asymmetric.capped_components.empty()) {
    out << ", capped components:";
    for (int c : r.asymmetric.capped_components) out << ' ' << c;
  }
  out << '\n';
}

int cmd_extremal(const Context& ctx, std::ostream& out) {
  const PermGroup group = ctx.group();
  const Spectrum spec = symmetric_eig(ctx.graph.adjacency(), ctx.cfg.cluster_tol);
  auto analyze = [&](const Subspace& ambient) {
    const auto cd = canonical_decomposition(ambient, group, ctx.cfg.seed, ctx.tols);
    const auto psi = reference_intertwiners(cd, group.generators(), ctx.cfg.tol);
    auto r = extremal_report(cd, psi, group, ctx.cfg.seed, ctx.cfg.tol);
    if (r.symmetric_closure_dim != r.symmetric.dim)
      throw Exit{kDisagreement, "symmetric vector closure " + std::to_string(r.symmetric_closure_dim) +
                                    " differs from block dimension " + std::to_string(r.symmetric.dim)};
    return r;
  };
  std::vector<std::pair<double, ExtremalReport>> per;
  for (const auto& p : spec.pairs) {
    Subspace space = p.space;
    space.tol = ctx.cfg.tol;
    per.emplace_back(p.value, analyze(space));
  }
  const ExtremalReport global = analyze(Subspace::full(ctx.n(), ctx.cfg.tol));

  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    Json eig = Json::array();
    for (const auto& [value, r] : per) {
      Json e = extremal_json(r);
      e["eigenvalue"] = value;
      eig.push_back(std::move(e));
    }
    j["eigenspaces"] = eig;
    j["global"] = extremal_json(global);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "graph: " << ctx.name << " (n=" << ctx.n() << "), group generators " << join_cycles(group.generators())
      << '\n';
  for (const auto& [value, r] : per) {
    out << "eigenspace " << num(value, 10) << " (dim " << r.ambient_dim << ")\n";
    print_extremal(out, r);
  }
  out << "global C^" << ctx.n() << '\n';
  print_extremal(out, global);
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Context& ctx, std::ostream& out) {
  const Permutation sigma = parse_cycles(ctx.cfg.perm, ctx.n());
  const EquivalenceReport r = verify_equivalence(ctx.graph, sigma, ctx.tols);
  if (ctx.cfg.format == Format::Json) {
    Json j = ctx.header();
    j["permutation"] = sigma.to_cycles();
    j["statements"] = {{"automorphism", r.s1},
                       {"eigenspaces_invariant", r.s2},
                       {"common_eigenbasis", r.s3},
                       {"permutation_eigenspaces_invariant", r.s4}};
    j["consistent"] = r.consistent();
    out << j.dump(2) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    out << "permutation " << sigma.to_cycles() << " on " << ctx.name << '\n';
    out << "  (1) automorphism of the graph:              " << yn(r.s1) << '\n';
    out << "  (2) every eigenspace of A is invariant:     " << yn(r.s2) << '\n';
    out << "  (3) common orthonormal eigenbasis exists:   " << yn(r.s3) << '\n';
    out << "  (4) every eigenspace of P is A-invariant:   " << yn(r.s4) << '\n';
    out << (r.consistent() ? "consistent" : "INCONSISTENT") << '\n';
  }
  return r.consistent() ? kOk : kInconsistent;
}

}  // namespace

std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"Graph automorphisms, eigenspaces and group-orbit spans"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> builtin_args;
  std::string format = "text";
  std::string base;
  std::optional<double> eigen;

  auto* source = app.add_option_group("source");
  source->add_option("--builtin", builtin_args, "Builtin graph: NAME [K]")->expected(1, 2);
  source->add_option("--input", cfg.input_path, "Edge list or graph6 file");
  source->require_option(1);

  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--tol", cfg.tol, "Rank/membership tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cluster-tol", cfg.cluster_tol, "Eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "Group enumeration cap")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--group", cfg.group, "Subgroup generators, cycle strings separated by ';'");

  auto* aut = app.add_subcommand("aut", "Automorphism group and orbit-stabilizer factorization");
  aut->add_option("--base", base, "Comma separated 1-based base points");
  app.add_subcommand("spectrum", "Adjacency eigenvalues and multiplicities");
  app.add_subcommand("decompose", "Isotypic decomposition of each eigenspace and of C^n");
  auto* span = app.add_subcommand("span", "dim span(Gv) by formula and by closure");
  auto* vec = span->add_option_group("vector");
  vec->add_option("--vector", cfg.vector_path, "File with one entry per line: re [im]");
  vec->add_flag("--random", cfg.random, "Seeded random vector (default)");
  vec->add_flag("--ones", cfg.ones, "All-ones vector");
  vec->add_option("--eigen", eigen, "Seeded random vector in the eigenspace of LAMBDA");
  vec->require_option(0, 1);
  app.add_subcommand("extremal", "Symmetric and asymmetric vectors");
  auto* verify = app.add_subcommand("verify", "Check the four equivalent automorphism statements");
  verify->add_option("--perm", cfg.perm, "Permutation in cycle notation, e.g. \"(1,4,2,5,3)\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : Format::Text;
  cfg.eigen = eigen;
  if (!builtin_args.empty()) {
    cfg.builtin = builtin_args[0];
    if (builtin_args.size() == 2) {
      try {
        cfg.builtin_size = std::stoi(builtin_args[1]);
      } catch (const std::exception&) {
        err << "error: builtin size '" << builtin_args[1] << "' is not an integer\n";
        return kParseError;
      }
    }
  }
  if (!base.empty()) {
    std::stringstream ss(base);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        cfg.base.push_back(std::stoi(item));
      } catch (const std::exception&) {
        err << "error: bad base point '" << item << "'\n";
        return kParseError;
      }
    }
  }
  return std::nullopt;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.tol <= 0.0 || cfg.cluster_tol <= 0.0 || cfg.cap < 1)
      throw Exit{kParseError, "tolerances must be positive and cap >= 1"};
    const Context ctx(cfg);
    if (cfg.command == "aut") return cmd_aut(ctx, out);
    if (cfg.command == "spectrum") return cmd_spectrum(ctx, out);
    if (cfg.command == "decompose") return cmd_decompose(ctx, out);
    if (cfg.command == "span") return cmd_span(ctx, out);
    if (cfg.command == "extremal") return cmd_extremal(ctx, out);
    if (cfg.command == "verify") return cmd_verify(ctx, out);
    throw Exit{kParseError, "unknown command '" + cfg.command + "'"};
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kOther;
  }
}

}  // namespace eigensym::cli
