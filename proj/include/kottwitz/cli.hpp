#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace kottwitz::cli {

// Settings shared by all subcommands. Flags fill it first; a --config file then overrides.
struct RunConfig {
  std::string group;          // descriptor such as "gl:4" or "d:4:galois=3"
  std::string type;           // type label such as "F4" or "2E6"
  std::optional<std::string> mu, nu, eps, delta, kappa, levi;
  std::string set = "B";      // B, A or generalized
  std::optional<long> denom_bound;
  long scan_bound = 30;
  bool json = false;
  bool serial = false;
  bool check_witnesses = false;
};

// "key = value" lines; '#' starts a comment. Unknown keys are an error.
void apply_config_file(RunConfig& cfg, const std::string& path);
// Group file with keys type (family), rank and optional galois_order / levi; returns a descriptor.
std::string read_group_file(const std::string& path, std::optional<std::string>& levi);

// Exit codes: 0 success, 1 internal error, 2 bad input or precondition, 3 enumeration bound.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kottwitz::cli
