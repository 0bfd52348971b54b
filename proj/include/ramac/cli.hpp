#ifndef RAMAC_CLI_HPP
#define RAMAC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramac/tower.hpp"

namespace ramac {

struct RunConfig {
  enum class Command { Ramify, Euler, Check, Verify, TraceIdeal, Counterexample };
  Command command = Command::Ramify;
  std::string counter_kind;  // "tame" or "unramified"
  std::string spec_path;
  std::string expr;  // check subcommand
  long long trials = 50;
  std::uint64_t seed = 0;
  long long k_min = -2;
  long long k_max = 3;
  std::string json_path;       // write the JSON report here when nonempty
  std::string format = "table";  // "table" or "json" on stdout
  int q = 4;
  int e = 3;
  int f = 2;
  long long i_min = -3;
  long long i_max = 5;
};

// Tower spec document: { "p": 2, "f": 1, "rhs": ["t^-1", "t^-3"] }.
struct TowerSpecFile {
  int p = 0;
  int f = 1;
  std::vector<std::string> rhs;
  std::string label;  // file stem
};

TowerSpecFile load_spec_file(const std::string& path);  // throws SchemaError
Tower tower_from_spec(const TowerSpecFile& spec);

// Executes one subcommand. Exit codes: 0 all assertions pass, 1 an assertion
// or criterion fails, 2 configuration/schema errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ramac

#endif
