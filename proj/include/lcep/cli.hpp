#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcep {

enum ExitCode : int { exit_ok = 0, exit_invalid_input = 2, exit_budget = 3, exit_claim = 4 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV rows of `bench`, header included.
struct BenchSpec {
  int seeds = 10;
  unsigned long long first_seed = 1;
  int n = 10;
  int m = 15;
  int ell = 4;
  int k = 2;
  int oracle_max_m = 20;
  bool timing = true;
};
std::string run_bench(const BenchSpec& spec);

}  // namespace lcep
