#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cmon/caps.hpp"

namespace cmon::cli {

enum ExitCode : int { pass = 0, failure = 1, usage = 2, cap = 3 };

int cmd_check(const std::string& path, const SizeCaps& caps, std::ostream& out);
int cmd_congruences(const std::string& path, bool maximal_only, const SizeCaps& caps,
                    std::ostream& out);
int cmd_embed(const std::string& path, bool verify, const std::optional<std::string>& out_path,
              const SizeCaps& caps, std::ostream& out);

struct IdentityOptions {
  std::optional<std::string> path;
  std::optional<std::size_t> functional;
  std::optional<std::size_t> universal;
  bool b_theory = false;
};
int cmd_identity(const IdentityOptions& opts, const std::string& text, const SizeCaps& caps,
                 std::ostream& out);

struct GenOptions {
  std::string kind;  // functional, basic, pointwise, power, bfunctional
  std::size_t x = 1;
  std::string programs = "1,a,bot";
  std::optional<std::string> mul;
  std::optional<std::string> out_path;
};
int cmd_gen(const GenOptions& opts, const SizeCaps& caps, std::ostream& out);

int cmd_selftest(const SizeCaps& caps, std::ostream& out);

/// Parses arguments and dispatches; maps library errors to exit codes.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace cmon::cli
