#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "altdet/parallel.hpp"

namespace altdet {

inline constexpr std::uint64_t kDefaultSeed = 0xC0A1;

enum class CheckMode { exhaustive, sampled };

/// Both sides of a failed diagram, verbatim.
struct Counterexample {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one commuting-diagram check.
struct LawReport {
  std::string diagram;
  std::size_t cases_checked = 0;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }

  /// `DIAGRAM <id> <pass|fail> checked=<n> mode=<exhaustive|sampled seed=<hex>> [witness=<expr>]`
  std::string to_line() const;
};

struct HarnessOptions {
  /// Largest layer iterated exhaustively.
  std::size_t exhaustive_cap = 1'000'000;
  /// Principal generators of a top layer are streamed when its carrier has at most this many points.
  std::size_t generator_bound = 20;
  std::size_t sample_count = 1000;
  std::uint64_t seed = kDefaultSeed;
  /// Sample even where the layer could be enumerated.
  bool force_sampled = false;
  /// Run the reference serial kernel instead of the OpenMP one.
  bool serial = false;
};

/// Per-case generator: case `i` of a sampled check always sees the same stream.
std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index);

/// Runs `equal(i)` for every case and records the first failing case via `witness(i)`.
LawReport run_diagram(std::string id, CheckMode mode, const HarnessOptions& opts,
                      std::size_t cases, const std::function<bool(std::size_t)>& equal,
                      const std::function<Counterexample(std::size_t)>& witness);

}  // namespace altdet
