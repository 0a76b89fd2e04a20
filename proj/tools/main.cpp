#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  eigensym::cli::RunConfig cfg;
  if (const auto code = eigensym::cli::parse_args(argc, argv, cfg, std::cout, std::cerr)) return *code;
  return eigensym::cli::run(cfg, std::cout, std::cerr);
}
