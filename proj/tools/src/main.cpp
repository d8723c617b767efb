#include <cstdlib>
#include <iostream>

#include "wonderful_cli/run.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_budget;
  if (const char* v = std::getenv("WONDERFUL_BUDGET")) env_budget = v;
  return wonderful::cli::main_entry(argc, argv, std::cout, std::cerr, env_budget);
}
