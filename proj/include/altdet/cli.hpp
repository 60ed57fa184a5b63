#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace altdet::io {

struct CliConfig {
  std::size_t max_word_len = 8;
  std::size_t state_cap = 50'000;
  std::size_t sample_count = 1000;
  std::uint64_t seed = 0xC0A1;
};

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2, kCapacity = 3 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altdet::io
