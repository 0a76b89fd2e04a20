#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eigensym/error.hpp"

namespace eigensym::cli {

inline constexpr int kJsonSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kParseError = 2,
  kCapExceeded = 3,
  kNoConvergence = 4,
  kDecompositionFailed = 5,
  kDisagreement = 6,
  kInconsistent = 7,
};

enum class Format { Text, Json };

struct RunConfig {
  std::string command;  // aut | spectrum | decompose | span | extremal | verify

  // Exactly one of builtin / input_path.
  std::string builtin;
  int builtin_size = 0;
  std::string input_path;

  std::uint64_t seed = 0;
  double tol = 1e-8;
  double cluster_tol = 1e-7;
  std::uint64_t cap = 1000000;
  Format format = Format::Text;

  std::string group;        // "CYCLES;CYCLES", empty = full automorphism group
  std::vector<int> base;    // aut: 1-based base points, empty = default rule

  // span: vector source
  std::string vector_path;
  bool random = false;
  bool ones = false;
  std::optional<double> eigen;

  std::string perm;         // verify
};

/// Parses argv with CLI11. On --help or a usage error returns the exit code
/// to use, having printed to out/err.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                              std::ostream& err);

/// Exit code for a core error class.
int exit_code_for(ErrorKind kind);

/// Runs one command; returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace eigensym::cli
