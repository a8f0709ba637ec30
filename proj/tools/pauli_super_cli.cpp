#include <iostream>
#include <variant>

#include "pauli_super/cli.hpp"

int main(int argc, char** argv) {
  auto parsed = pauli_super::cli::parse_command_line(argc, argv);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return pauli_super::cli::run(std::get<pauli_super::cli::RunConfig>(parsed), std::cout);
}
