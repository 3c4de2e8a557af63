#include <iostream>

#include "hecke_cli/cli.hpp"

int main(int argc, char** argv) {
  const auto parsed = hecke::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (!parsed.command) return parsed.exit_code;
  return hecke::cli::run(*parsed.command, std::cout, std::cerr);
}
