#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "altdet/alt.hpp"
#include "altdet/cli.hpp"
#include "altdet/document.hpp"
#include "altdet/laws.hpp"
#include "altdet/semantics.hpp"
#include "altdet/suite.hpp"

using namespace altdet;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::size_t count_reports(const std::vector<suite::Subject>& subjects) {
  std::size_t n = 0;
  for (const auto& s : subjects) n += s.reports.size();
  return n;
}

void require_suite(Outcome& o, const std::vector<suite::Subject>& subjects) {
  for (const auto& s : subjects) {
    for (const auto& r : s.reports)
      if (!s.expect_failure) o.require(r.passed(), r.to_line());
    o.require(s.as_expected(), "subject " + s.name + " not as expected");
  }
}

const LawReport* find(const std::vector<suite::Subject>& subjects, const std::string& diagram) {
  for (const auto& s : subjects)
    for (const auto& r : s.reports)
      if (r.diagram == diagram) return &r;
  return nullptr;
}

void require_mode(Outcome& o, const std::vector<suite::Subject>& subjects, const std::string& diagram, CheckMode mode,
                  std::size_t min_cases = 1) {
  const auto* r = find(subjects, diagram);
  o.require(r != nullptr, "missing diagram " + diagram);
  if (!r) return;
  o.require(r->mode == mode, diagram + " ran in the wrong mode");
  o.require(r->cases_checked >= min_cases, diagram + " checked too few cases");
}

// BFS subset construction written against the NFA fields only.
struct Subsets {
  std::vector<StateSet> states;
  std::vector<bool> output;
  std::vector<std::vector<std::size_t>> next;
};

Subsets textbook_subsets(const automata::Nfa& n) {
  Subsets out;
  std::map<StateSet, std::size_t> index;
  out.states.push_back(StateSet(n.state_count(), {0}));
  index[out.states[0]] = 0;
  for (std::size_t i = 0; i < out.states.size(); ++i) {
    const StateSet cur = out.states[i];
    bool acc = false;
    std::vector<std::size_t> row;
    for (std::size_t q = 0; q < n.state_count(); ++q)
      if (cur.contains(q) && n.output[q]) acc = true;
    for (std::size_t a = 0; a < n.alphabet.size(); ++a) {
      StateSet succ(n.state_count());
      for (std::size_t q = 0; q < n.state_count(); ++q)
        if (cur.contains(q)) succ |= n.next[q][a];
      if (!index.count(succ)) {
        index[succ] = out.states.size();
        out.states.push_back(succ);
      }
      row.push_back(index[succ]);
    }
    out.output.push_back(acc);
    out.next.push_back(row);
  }
  return out;
}

Outcome criterion_monads() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<suite::Subject> all;
  for (const char* m : {"powerset", "up", "down", "alt"})
    for (auto& s : suite::run_monad_suite(m)) all.push_back(std::move(s));
  const double elapsed = seconds_since(t0);
  require_suite(o, all);
  for (std::size_t n = 0; n <= 3; ++n)
    for (const char* law : {"unit-left", "unit-right", "assoc"})
      require_mode(o, all, "powerset[" + std::to_string(n) + "]." + law, CheckMode::exhaustive);
  std::size_t poset_reports = 0;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& p : order::all_posets(n))
      for (const char* m : {"up", "down"})
        for (const char* law : {"unit-left", "unit-right", "assoc"}) {
          require_mode(o, all, std::string(m) + "[" + p.to_string() + "]." + law, CheckMode::exhaustive);
          ++poset_reports;
        }
  for (const char* m : {"up", "down"})
    for (const char* law : {"unit-left", "unit-right", "assoc"})
      require_mode(o, all, std::string(m) + "[diamond]." + law, CheckMode::sampled, 1000);
  for (std::size_t n = 0; n <= 2; ++n)
    for (const char* law : {"unit-left", "unit-right"})
      require_mode(o, all, "alt[" + std::to_string(n) + "]." + law, CheckMode::exhaustive);
  require_mode(o, all, "alt[1].assoc", CheckMode::exhaustive);
  require_mode(o, all, "alt[2].assoc", CheckMode::sampled, 1000);
  if (const auto* r = find(all, "alt[2].assoc")) o.require(r->seed == kDefaultSeed, "alt[2].assoc seed not fixed");
  o.require(monad::enumerate_alt(3).size() == 20, "Alt² layer over one point is not 20 elements");
  o.require(elapsed < 60.0, "monad suite took longer than 60 s");
  if (o.ok)
    o.detail = std::to_string(count_reports(all)) + " diagrams, " + std::to_string(poset_reports) +
               " on posets of size <= 3";
  return o;
}

Outcome criterion_distlaw() {
  Outcome o;
  const auto subjects = suite::run_distlaw_suite();
  require_suite(o, subjects);
  const std::vector<std::string> diagrams{"unit-dn-triangle", "unit-up-triangle", "mult-dn-rectangle",
                                          "mult-up-rectangle"};
  for (std::size_t n = 0; n <= 2; ++n)
    for (const auto& d : diagrams)
      require_mode(o, subjects, "dist[discrete" + std::to_string(n) + "]." + d, CheckMode::exhaustive);
  for (const char* p : {"chain3", "diamond4"})
    for (const auto& d : diagrams)
      require_mode(o, subjects, "dist[" + std::string(p) + "-sampled]." + d, CheckMode::sampled, 1000);
  if (o.ok) o.detail = std::to_string(count_reports(subjects)) + " diagrams";
  return o;
}

Outcome criterion_negative() {
  Outcome o;
  const auto subjects = suite::run_negative_suite();
  for (const auto& s : subjects) o.require(s.as_expected(), "subject " + s.name + " not as expected");

  const std::string path = "negative_witnesses.txt";
  {
    std::ofstream out(path);
    out << suite::format_witnesses(subjects);
  }
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  o.require(text.str().find("WITNESS cnf-exact.naturality") != std::string::npos, "no persisted cnf-exact witness");

  const auto t0 = std::chrono::steady_clock::now();
  const auto three = laws::check_cnf_naturality(true, 3, 3);
  const double search = seconds_since(t0);
  o.require(!three.passed(), "no cnf-exact witness over three-point domains");
  o.require(three.mode == CheckMode::exhaustive, "three-point search was not exhaustive");
  o.require(search < 10.0, "three-point search took longer than 10 s");
  if (three.counterexample) o.require(starts_with(three.counterexample->input, "f=[0,0,0],"),
                                      "three-point witness has the wrong domain");

  bool atleast_failure = false;
  for (const auto& s : subjects)
    if (s.name == "pp-atleast")
      for (const auto& r : s.reports)
        if (!r.passed() && r.mode == CheckMode::exhaustive) atleast_failure = true;
  o.require(atleast_failure, "no failed diagram for the at-least-one candidate within bounds");
  if (o.ok) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "three-point search %.2f s", search);
    o.detail = "witnesses in " + path + ", " + buf;
  }
  return o;
}

Outcome criterion_order() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto subjects = suite::run_order_suite();
  const double elapsed = seconds_since(t0);
  require_suite(o, subjects);
  for (const auto& s : subjects)
    for (const auto& r : s.reports) o.require(r.mode == CheckMode::exhaustive, r.diagram + " not exhaustive");
  o.require(elapsed < 30.0, "order suite took longer than 30 s");
  if (o.ok) o.detail = std::to_string(count_reports(subjects)) + " diagrams";
  return o;
}

Outcome criterion_parity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto afa = automata::parity_afa();
  std::size_t words = 0;
  for (const auto& w : automata::all_words(2, 8)) {
    if (w.empty()) continue;
    ++words;
    std::size_t as = 0, bs = 0;
    for (auto c : w) (c == 0 ? as : bs) += 1;
    const bool claim = (as % 2 == 0 && bs % 2 == 0) || (as % 2 == 1 && bs % 2 == 1);
    o.require(automata::afa_accepts(afa, 0, w) == claim, "mismatch on " + automata::format_word(afa.alphabet, w));
  }
  o.require(!automata::afa_accepts(afa, 0, {}), "the empty word is accepted");
  o.require(words == 510, "expected 510 nonempty words");
  o.require(seconds_since(t0) < 1.0, "parity check took longer than 1 s");
  if (o.ok) o.detail = std::to_string(words) + " words";
  return o;
}

Outcome criterion_correspondence() {
  Outcome o;
  const auto subjects = suite::run_semantics_suite();
  require_suite(o, subjects);
  require_mode(o, subjects, "correspondence[alt,q0]", CheckMode::exhaustive, 511);
  const auto nfas = suite::random_nfas(50, 4, kDefaultSeed);
  for (const auto& n : nfas) o.require(n.state_count() <= 4 && n.alphabet.size() == 2, "random NFA out of bounds");
  for (std::size_t i = 0; i < nfas.size(); ++i)
    for (const char* beta : {"max", "min"})
      require_mode(o, subjects, "nfa" + std::to_string(i) + ".correspondence[" + beta + ",q0]", CheckMode::exhaustive,
                   127);
  if (o.ok) o.detail = "parity AFA and 50 random NFAs under max and min";
  return o;
}

Outcome criterion_subsets() {
  Outcome o;
  std::size_t states = 0;
  for (const auto& n : suite::random_nfas(50, 4, kDefaultSeed)) {
    const auto machine = semantics::determinize(semantics::as_t_automaton(n), semantics::max_algebra(), 0);
    const auto oracle = textbook_subsets(n);
    o.require(machine.decode == oracle.states, "decoded states differ from the subset construction");
    o.require(machine.dfa.output == oracle.output, "outputs differ from the subset construction");
    o.require(machine.dfa.next == oracle.next, "transitions differ from the subset construction");
    const automata::Dfa reference(n.alphabet, oracle.output, oracle.next);
    o.require(automata::dfa_equiv(machine.dfa, 0, reference, 0).equivalent, "languages differ");
    states += oracle.states.size();
  }
  if (o.ok) o.detail = "50 NFAs, " + std::to_string(states) + " subset states";
  return o;
}

Outcome criterion_free_algebra() {
  Outcome o;
  o.require(monad::enumerate_alt(0).size() == 2, "|Alt(0)| != 2");
  const auto r = semantics::check_free_algebra_identity();
  o.require(r.passed(), r.to_line());
  o.require(r.mode == CheckMode::exhaustive, "free-algebra check not exhaustive");
  if (o.ok) o.detail = std::to_string(r.cases_checked) + " elements of Alt(Alt(0))";
  return o;
}

Outcome criterion_cli() {
  Outcome o;
  const std::filesystem::path dir(ALTDET_FIXTURES);
  std::size_t fixtures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto doc = io::load_document(entry.path().string());
    const auto text = io::print_document(doc);
    o.require(io::parse_document(text) == doc, "round-trip changed " + entry.path().filename().string());
    o.require(io::print_document(io::parse_document(text)) == text, "printing is not stable");
    ++fixtures;
  }
  const auto cli = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = io::run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  const std::string parity = (dir / "parity.afa").string();
  for (const auto& [word, accept] : std::vector<std::pair<std::string, bool>>{
           {"ab", true}, {"aa", true}, {"b", false}, {"", false}}) {
    std::string out;
    const int code = cli({"accept", parity, "q0", word}, &out);
    o.require(code == (accept ? 0 : 1) && out == (accept ? "accept\n" : "reject\n"),
              "accept \"" + word + "\" gave " + out);
  }
  o.require(cli({"check-laws", "--all"}) == 0, "check-laws --all did not exit 0");
  if (o.ok) o.detail = std::to_string(fixtures) + " fixtures";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"monad-law suite", criterion_monads},
      {"distributive-law suite", criterion_distlaw},
      {"negative suite", criterion_negative},
      {"order-lemma suite", criterion_order},
      {"parity automaton", criterion_parity},
      {"semantics correspondence", criterion_correspondence},
      {"subset-construction equivalence", criterion_subsets},
      {"free-algebra identity", criterion_free_algebra},
      {"CLI golden tests", criterion_cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(t0);
    if (!o.ok) ++failures;
    std::printf("%s %zu %s (%s; %.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
