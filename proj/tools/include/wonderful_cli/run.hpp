#ifndef WONDERFUL_CLI_RUN_HPP
#define WONDERFUL_CLI_RUN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "wonderful/arrangements.hpp"

namespace wonderful::cli {

enum class Command {
  Validate,
  BuildingSet,
  Nests,
  Class,
  ConfClass,
  CClass,
  Hodge,
  Euler,
  Divergence,
  Strata,
  Identities,
};

enum class Format { Text, Json, Dot };

struct RunConfig {
  Command command = Command::Validate;
  std::string graph_source;
  int d = 4;
  std::string target = "symbolic";  // symbolic | Pd | Ad | P<n> | A<n> | custom:<path>
  Format format = Format::Text;
  std::uint64_t budget = kDefaultBudget;
  bool literal_prop3 = false;
  bool literal_lemma14 = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command. Domain errors give exit 1 (an error object on
/// `out` in json mode, a message on `err` otherwise); invalid combinations
/// of options give exit 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line (argv[0] is the program name) and runs it.
/// `env_budget` is the value of WONDERFUL_BUDGET, if set.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               std::optional<std::string> env_budget = std::nullopt);

}  // namespace wonderful::cli

#endif  // WONDERFUL_CLI_RUN_HPP
