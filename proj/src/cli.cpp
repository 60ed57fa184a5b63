#include "altdet/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "altdet/document.hpp"
#include "altdet/dot.hpp"
#include "altdet/errors.hpp"
#include "altdet/semantics.hpp"
#include "altdet/suite.hpp"

namespace altdet::io {

namespace {

using automata::Dfa;
using automata::Word;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string show_states(const StateSet& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t q) {
    out += (first ? "" : " ") + names.at(q);
    first = false;
  });
  return out + "}";
}

std::string show_states(const monad::AltElement& e, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.forks().size(); ++i) out += (i ? " " : "") + show_states(e.forks().sets()[i], names);
  return out + "}";
}

// A determinized machine with a printable label per state.
struct Determinized {
  Dfa dfa;
  std::vector<std::string> labels;
  std::optional<LawReport> check;
};

template <monad::SetMonad M>
Determinized finish(const semantics::TAutomaton<M>& aut, const semantics::AlgebraOnTwo<M>& beta, std::size_t start,
                    const std::vector<std::string>& names, const CliConfig& cfg, bool verify) {
  auto machine = semantics::determinize<M>(aut, beta, start, cfg.state_cap);
  Determinized d{std::move(machine.dfa), {}, std::nullopt};
  for (const auto& e : machine.decode) d.labels.push_back(show_states(e, names));
  if (verify) d.check = semantics::check_semantics_correspondence<M>(aut, beta, start, cfg.max_word_len, {}, cfg.state_cap);
  return d;
}

semantics::AlgebraOnTwo<monad::PowersetMonad> powerset_algebra(const std::string& algebra) {
  if (algebra == "max" || algebra.empty()) return semantics::max_algebra();
  if (algebra == "min") return semantics::min_algebra();
  throw Usage("unknown algebra '" + algebra + "' for an nfa (expected max or min)");
}

void require_alt(const std::string& algebra) {
  if (!algebra.empty() && algebra != "alt") throw Usage("an afa is read with the alt algebra only");
}

Determinized determinize_document(const AutomatonDocument& doc, const std::string& start,
                                  const std::string& algebra, const CliConfig& cfg, bool verify) {
  const std::size_t q = doc.state_index(start);
  if (doc.kind == Kind::afa) {
    require_alt(algebra);
    return finish(semantics::as_t_automaton(to_afa(doc)), semantics::alt_algebra(), q, doc.states, cfg, verify);
  }
  return finish(semantics::as_t_automaton(to_nfa(doc)), powerset_algebra(algebra), q, doc.states, cfg, verify);
}

bool accepts(const AutomatonDocument& doc, const std::string& state, const Word& w, const std::string& algebra) {
  const std::size_t q = doc.state_index(state);
  if (doc.kind == Kind::afa) {
    require_alt(algebra);
    return semantics::beh1(semantics::as_t_automaton(to_afa(doc)), semantics::alt_algebra(), q, w);
  }
  return semantics::beh1(semantics::as_t_automaton(to_nfa(doc)), powerset_algebra(algebra), q, w);
}

std::vector<std::string> synthetic_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Determinization and law checking for alternating automata", "altdet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "altdet 0.1.0");

  const auto positive = CLI::PositiveNumber;
  const auto add_config = [&](CLI::App* c) {
    c->add_option("--max-word-len", cfg.max_word_len, "Length bound of word sweeps")->check(positive);
    c->add_option("--state-cap", cfg.state_cap, "Largest determinized machine")->check(positive);
  };

  std::string file, file2, state, state2, word, algebra, dot_path, witness_out, monad_name;
  bool all = false, distlaw = false, negative = false, order = false, sem = false;

  auto* accept = app.add_subcommand("accept", "Decide whether STATE accepts WORD");
  accept->add_option("file", file, "Automaton document")->required();
  accept->add_option("state", state, "State name")->required();
  accept->add_option("word", word, "Word; symbols separated by spaces unless all are single characters")->required();
  accept->add_option("--algebra", algebra, "max (existential) or min (universal) for nfa documents");
  add_config(accept);

  auto* det = app.add_subcommand("determinize", "Print the reachable determinized machine from START");
  det->add_option("file", file, "Automaton document")->required();
  det->add_option("start", state, "Start state name")->required();
  det->add_option("--algebra", algebra, "max or min for nfa documents");
  det->add_option("--dot", dot_path, "Also write Graphviz output to this path");
  add_config(det);

  auto* equiv = app.add_subcommand("equiv", "Compare the languages of two states");
  equiv->add_option("file1", file, "First automaton document")->required();
  equiv->add_option("state1", state, "State of the first automaton")->required();
  equiv->add_option("file2", file2, "Second automaton document")->required();
  equiv->add_option("state2", state2, "State of the second automaton")->required();
  equiv->add_option("--algebra", algebra, "max or min for nfa documents");
  add_config(equiv);

  auto* check = app.add_subcommand("check-laws", "Run the law-checking harness");
  auto* g_all = check->add_flag("--all", all, "Every suite");
  auto* g_monad = check->add_option("--monad", monad_name, "powerset, up, down or alt");
  auto* g_dist = check->add_flag("--distlaw", distlaw, "The distributive law Dn∘Up ⇒ Up∘Dn");
  auto* g_neg = check->add_flag("--negative", negative, "The refuted candidates");
  auto* g_order = check->add_flag("--order", order, "The order lemmas");
  auto* g_sem = check->add_flag("--semantics", sem, "Algebras and determinization");
  const std::vector<CLI::Option*> scopes{g_all, g_monad, g_dist, g_neg, g_order, g_sem};
  for (auto* a : scopes)
    for (auto* b : scopes)
      if (a != b) a->excludes(b);
  check->add_option("--samples", cfg.sample_count, "Cases per sampled diagram")->check(positive);
  check->add_option("--seed", cfg.seed, "Seed of sampled diagrams");
  check->add_option("--witness-out", witness_out, "Write counterexamples of refuted candidates here");

  auto* export_dot = app.add_subcommand("export-dot", "Print a document as a Graphviz digraph");
  export_dot->add_option("file", file, "Automaton document")->required();
  export_dot->add_option("--start", state, "Draw an entry arrow to this state");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (accept->parsed()) {
      const auto doc = load_document(file);
      const Word w = automata::parse_word(automata::Alphabet(doc.alphabet), word);
      const bool ok = accepts(doc, state, w, algebra);
      out << (ok ? "accept" : "reject") << "\n";
      return ok ? kSuccess : kNegative;
    }

    if (det->parsed()) {
      const auto doc = load_document(file);
      const auto d = determinize_document(doc, state, algebra, cfg, true);
      const auto names = synthetic_names(d.dfa.state_count());
      std::vector<std::string> comments;
      for (std::size_t i = 0; i < names.size(); ++i) comments.push_back(names[i] + " = " + d.labels[i]);
      const auto result = from_dfa(d.dfa, names);
      out << print_document(result, comments);
      if (!dot_path.empty()) write_file(dot_path, to_dot(result, names.at(0)));
      if (d.check && !d.check->passed()) {
        err << d.check->to_line() << "\n";
        return kNegative;
      }
      return kSuccess;
    }

    if (equiv->parsed()) {
      const auto doc1 = load_document(file);
      const auto doc2 = load_document(file2);
      if (doc1.alphabet != doc2.alphabet) throw Usage("the two documents declare different alphabets");
      const auto d1 = determinize_document(doc1, state, algebra, cfg, false);
      const auto d2 = determinize_document(doc2, state2, algebra, cfg, false);
      const auto e = automata::dfa_equiv(d1.dfa, 0, d2.dfa, 0);
      if (e.equivalent) {
        out << "equivalent\n";
        return kSuccess;
      }
      out << "distinguished by \"" << automata::format_word(d1.dfa.alphabet, *e.witness) << "\"\n";
      return kNegative;
    }

    if (check->parsed()) {
      HarnessOptions opts;
      opts.sample_count = cfg.sample_count;
      opts.seed = cfg.seed;
      std::vector<suite::Subject> subjects;
      if (!monad_name.empty()) {
        subjects = suite::run_monad_suite(monad_name, opts);
      } else if (distlaw) {
        subjects = suite::run_distlaw_suite(opts);
      } else if (negative) {
        subjects = suite::run_negative_suite(opts);
      } else if (order) {
        subjects = suite::run_order_suite(opts);
      } else if (sem) {
        subjects = suite::run_semantics_suite(opts);
      } else {
        subjects = suite::run_all(opts);
      }
      out << suite::format_subjects(subjects);
      if (!witness_out.empty()) write_file(witness_out, suite::format_witnesses(subjects));
      return suite::all_as_expected(subjects) ? kSuccess : kNegative;
    }

    if (export_dot->parsed()) {
      const auto doc = load_document(file);
      out << to_dot(doc, state.empty() ? std::nullopt : std::optional<std::string>(state));
      return kSuccess;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace altdet::io
