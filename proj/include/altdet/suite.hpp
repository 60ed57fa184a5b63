#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "altdet/automata.hpp"
#include "altdet/law_report.hpp"

namespace altdet::suite {

/// A named group of diagrams that should all pass, or (for a negative subject) not all pass.
struct Subject {
  std::string name;
  bool expect_failure = false;
  std::vector<LawReport> reports;

  bool failed() const;
  bool as_expected() const { return failed() == expect_failure; }
};

/// `powerset`, `up`, `down` or `alt`; DomainError for any other name.
std::vector<Subject> run_monad_suite(const std::string& name, const HarnessOptions& opts = {});
std::vector<Subject> run_distlaw_suite(const HarnessOptions& opts = {});
std::vector<Subject> run_negative_suite(const HarnessOptions& opts = {});
std::vector<Subject> run_semantics_suite(const HarnessOptions& opts = {});
std::vector<Subject> run_order_suite(const HarnessOptions& opts = {});
std::vector<Subject> run_all(const HarnessOptions& opts = {});

bool all_as_expected(const std::vector<Subject>& subjects);

/// One DIAGRAM line per report, a SUBJECT line per subject and a closing SUMMARY line.
std::string format_subjects(const std::vector<Subject>& subjects);

/// Failed diagrams of negative subjects, one `WITNESS` line each.
std::string format_witnesses(const std::vector<Subject>& subjects);

/// `count` NFAs with 1..max_states states over {a, b}; transition bits and outputs uniform.
std::vector<automata::Nfa> random_nfas(std::size_t count, std::size_t max_states, std::uint64_t seed);

/// 1 iff w is nonempty and the counts of a and b have equal parity.
bool parity_language(const automata::Word& w);

}  // namespace altdet::suite
