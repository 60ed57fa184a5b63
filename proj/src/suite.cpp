#include "altdet/suite.hpp"

#include <algorithm>

#include "altdet/errors.hpp"
#include "altdet/laws.hpp"
#include "altdet/order_lemmas.hpp"
#include "altdet/poset.hpp"
#include "altdet/semantics.hpp"
#include "altdet/set_monad.hpp"

namespace altdet::suite {

using order::FinitePoset;

bool Subject::failed() const {
  return std::any_of(reports.begin(), reports.end(), [](const LawReport& r) { return !r.passed(); });
}

namespace {

void append(std::vector<LawReport>& to, std::vector<LawReport> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

std::vector<FinitePoset> posets_up_to(std::size_t max_n) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& p : order::all_posets(n)) out.push_back(std::move(p));
  return out;
}

HarnessOptions sampled_only(HarnessOptions opts) {
  opts.force_sampled = true;
  opts.sample_count = std::max<std::size_t>(opts.sample_count, 1000);
  return opts;
}

Subject poset_monad_subject(monad::Direction d, const HarnessOptions& opts) {
  Subject s{monad::to_string(d), false, {}};
  for (const auto& p : posets_up_to(3)) append(s.reports, laws::check_poset_monad_laws(d, p, p.to_string(), opts));
  append(s.reports, laws::check_poset_monad_laws(d, FinitePoset::diamond(), "diamond", sampled_only(opts)));
  append(s.reports, laws::check_poset_functor_laws(d, 3, opts));
  if (d == monad::Direction::down) s.reports.push_back(laws::check_dn_discrete_is_powerset(3, opts));
  return s;
}

}  // namespace

std::vector<Subject> run_monad_suite(const std::string& name, const HarnessOptions& opts) {
  if (name == "powerset") {
    Subject s{"powerset", false, {}};
    for (std::size_t n = 0; n <= 3; ++n) append(s.reports, laws::check_set_monad_laws<monad::PowersetMonad>(n, opts));
    append(s.reports, laws::check_functor_laws<monad::PowersetMonad>(3, opts));
    return {s};
  }
  if (name == "up") return {poset_monad_subject(monad::Direction::up, opts)};
  if (name == "down") return {poset_monad_subject(monad::Direction::down, opts)};
  if (name == "alt") {
    Subject s{"alt", false, {}};
    for (std::size_t n = 0; n <= 2; ++n) append(s.reports, laws::check_set_monad_laws<monad::AltMonad>(n, opts));
    append(s.reports, laws::check_functor_laws<monad::AltMonad>(2, opts));
    s.reports.push_back(laws::check_alt_unit_naturality(3, opts));
    for (std::size_t n = 1; n <= 2; ++n) s.reports.push_back(laws::check_alt_pipeline(n, opts));
    return {s};
  }
  throw DomainError("unknown monad '" + name + "' (expected powerset, up, down or alt)");
}

std::vector<Subject> run_distlaw_suite(const HarnessOptions& opts) {
  Subject s{"distlaw", false, {}};
  for (std::size_t n = 0; n <= 2; ++n)
    append(s.reports, laws::check_dist_law(FinitePoset::discrete(n), "discrete" + std::to_string(n), opts));
  for (const auto& [p, label] : {std::pair{FinitePoset::chain(3), "chain3"}, std::pair{FinitePoset::diamond(), "diamond4"}}) {
    append(s.reports, laws::check_dist_law(p, label, opts));
    append(s.reports, laws::check_dist_law(p, std::string(label) + "-sampled", sampled_only(opts)));
  }
  s.reports.push_back(laws::check_dist_naturality(3, opts));
  return {s};
}

std::vector<Subject> run_negative_suite(const HarnessOptions& opts) {
  std::vector<Subject> out;
  out.push_back({"cnf-exact", true,
                 {laws::check_cnf_naturality(true, 1, 2, opts), laws::check_cnf_naturality(true, 3, 3, opts)}});

  Subject atleast{"pp-atleast", true, {}};
  HarnessOptions small = opts;
  small.force_sampled = false;
  for (std::size_t n = 0; n <= 4; ++n) {
    const HarnessOptions& o = n <= 2 ? small : opts;
    append(atleast.reports, laws::check_set_monad_laws<monad::AtLeastOneCandidate>(n, o));
    append(atleast.reports, laws::check_atleast_exchange(n, o));
  }
  out.push_back(std::move(atleast));

  out.push_back({"cnf-atleast", false, {laws::check_cnf_naturality(false, 1, 3, opts)}});
  return out;
}

bool parity_language(const automata::Word& w) { return !w.empty() && w.size() % 2 == 0; }

std::vector<automata::Nfa> random_nfas(std::size_t count, std::size_t max_states, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_states);
  std::bernoulli_distribution coin(0.5);
  const automata::Alphabet ab({"a", "b"});
  std::vector<automata::Nfa> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size(rng);
    std::vector<bool> output(n);
    std::vector<std::vector<StateSet>> next(n, std::vector<StateSet>(2, StateSet(n)));
    for (std::size_t q = 0; q < n; ++q) {
      output[q] = coin(rng);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t p = 0; p < n; ++p)
          if (coin(rng)) next[q][a].insert(p);
    }
    out.emplace_back(ab, std::move(output), std::move(next));
  }
  return out;
}

std::vector<Subject> run_semantics_suite(const HarnessOptions& opts) {
  using namespace semantics;
  std::vector<Subject> out;

  Subject em{"em-algebras", false, {}};
  append(em.reports, check_em_laws(max_algebra(), opts));
  append(em.reports, check_em_laws(min_algebra(), opts));
  append(em.reports, check_em_laws(alt_algebra(), opts));
  em.reports.push_back(check_free_algebra_identity(opts));
  out.push_back(std::move(em));

  const auto parity = automata::parity_afa();
  const auto words = automata::all_words(parity.alphabet.size(), 8);
  Subject lang{"parity-afa", false, {}};
  lang.reports.push_back(laws::check_paths(
      "parity.language", laws::all_of(words), opts,
      [&](const automata::Word& w) { return automata::afa_accepts(parity, 0, w); }, parity_language,
      [&](const automata::Word& w) { return "\"" + automata::format_word(parity.alphabet, w) + "\""; },
      [](bool b) { return std::string(b ? "1" : "0"); }));
  const auto t_parity = as_t_automaton(parity);
  const auto beta = alt_algebra();
  lang.reports.push_back(check_semantics_correspondence(t_parity, beta, 0, 8, opts));
  lang.reports.push_back(check_powerset_triangle(t_parity, beta, opts));
  out.push_back(std::move(lang));

  Subject nfas{"random-nfa", false, {}};
  const auto sample = random_nfas(50, 4, opts.seed);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto t = as_t_automaton(sample[i]);
    for (const auto& b : {max_algebra(), min_algebra()}) {
      auto r = check_semantics_correspondence(t, b, 0, 6, opts);
      r.diagram = "nfa" + std::to_string(i) + "." + r.diagram;
      nfas.reports.push_back(std::move(r));
      auto tri = check_powerset_triangle(t, b, opts);
      tri.diagram = "nfa" + std::to_string(i) + "." + tri.diagram;
      nfas.reports.push_back(std::move(tri));
    }
  }
  out.push_back(std::move(nfas));
  return out;
}

std::vector<Subject> run_order_suite(const HarnessOptions& opts) {
  Subject s{"order-lemmas", false, {}};
  s.reports.push_back(order::check_closure_union_lemma(3, opts));
  auto [up, down] = order::check_closure_image_lemma(3, opts);
  s.reports.push_back(std::move(up));
  s.reports.push_back(std::move(down));
  s.reports.push_back(order::check_closure_intersection_lemma(3, opts));
  return {s};
}

std::vector<Subject> run_all(const HarnessOptions& opts) {
  std::vector<Subject> out;
  const auto add = [&](std::vector<Subject> more) {
    for (auto& s : more) out.push_back(std::move(s));
  };
  add(run_order_suite(opts));
  for (const char* m : {"powerset", "up", "down", "alt"}) add(run_monad_suite(m, opts));
  add(run_distlaw_suite(opts));
  add(run_negative_suite(opts));
  add(run_semantics_suite(opts));
  return out;
}

bool all_as_expected(const std::vector<Subject>& subjects) {
  return std::all_of(subjects.begin(), subjects.end(), [](const Subject& s) { return s.as_expected(); });
}

std::string format_subjects(const std::vector<Subject>& subjects) {
  std::string out;
  std::size_t unexpected = 0;
  for (const auto& s : subjects) {
    for (const auto& r : s.reports) out += r.to_line() + "\n";
    const bool ok = s.as_expected();
    if (!ok) ++unexpected;
    out += "SUBJECT " + s.name + " expect=" + (s.expect_failure ? "fail" : "pass") +
           " result=" + (s.failed() ? "fail" : "pass") + (ok ? " ok" : " UNEXPECTED") + "\n";
  }
  out += "SUMMARY subjects=" + std::to_string(subjects.size()) + " unexpected=" + std::to_string(unexpected) + "\n";
  return out;
}

std::string format_witnesses(const std::vector<Subject>& subjects) {
  std::string out;
  for (const auto& s : subjects) {
    if (!s.expect_failure) continue;
    for (const auto& r : s.reports)
      if (r.counterexample)
        out += "WITNESS " + r.diagram + " input=" + r.counterexample->input + " lhs=" + r.counterexample->lhs +
               " rhs=" + r.counterexample->rhs + "\n";
  }
  return out;
}

}  // namespace altdet::suite
