#include "altdet/law_report.hpp"

#include <sstream>

namespace altdet {

std::string LawReport::to_line() const {
  std::ostringstream out;
  out << "DIAGRAM " << diagram << ' ' << (passed() ? "pass" : "fail") << " checked=" << cases_checked
      << " mode=";
  if (mode == CheckMode::exhaustive) {
    out << "exhaustive";
  } else {
    out << "sampled seed=0x" << std::hex << std::uppercase << seed << std::dec << std::nouppercase;
  }
  if (counterexample)
    out << " witness=" << counterexample->input << " lhs=" << counterexample->lhs
        << " rhs=" << counterexample->rhs;
  return out.str();
}

std::mt19937_64 case_rng(std::uint64_t seed, std::size_t index) {
  // splitmix64 of (seed, index)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

LawReport run_diagram(std::string id, CheckMode mode, const HarnessOptions& opts,
                      std::size_t cases, const std::function<bool(std::size_t)>& equal,
                      const std::function<Counterexample(std::size_t)>& witness) {
  LawReport report;
  report.diagram = std::move(id);
  report.mode = mode;
  report.seed = opts.seed;
  auto failure = opts.serial ? parallel::first_failure_serial(cases, equal)
                             : parallel::first_failure(cases, equal);
  if (failure) {
    report.cases_checked = *failure + 1;
    report.counterexample = witness(*failure);
  } else {
    report.cases_checked = cases;
  }
  return report;
}

}  // namespace altdet
