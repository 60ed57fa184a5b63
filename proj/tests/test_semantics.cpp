#include "test_support.hpp"

#include <map>

#include "altdet/errors.hpp"
#include "altdet/semantics.hpp"
#include "altdet/suite.hpp"

using namespace altdet;
using namespace altdet::semantics;
using automata::all_words;
using monad::AltElement;

namespace {

// Textbook subset construction: BFS over reachable subsets, letters in alphabet order.
struct SubsetDfa {
  std::vector<StateSet> subsets;
  Dfa dfa;
};

SubsetDfa subset_construction(const automata::Nfa& n, std::size_t start) {
  const std::size_t k = n.alphabet.size();
  std::map<StateSet, std::size_t> index;
  std::vector<StateSet> subsets{StateSet(n.state_count(), {start})};
  index.emplace(subsets[0], 0);
  std::vector<bool> output;
  std::vector<std::vector<std::size_t>> next;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const StateSet cur = subsets[i];
    bool acc = false;
    cur.for_each([&](std::size_t q) { acc = acc || n.output[q]; });
    output.push_back(acc);
    std::vector<std::size_t> row;
    for (std::size_t a = 0; a < k; ++a) {
      StateSet succ(n.state_count());
      cur.for_each([&](std::size_t q) { succ |= n.next[q][a]; });
      auto [it, fresh] = index.emplace(succ, subsets.size());
      if (fresh) subsets.push_back(succ);
      row.push_back(it->second);
    }
    next.push_back(row);
  }
  return {subsets, Dfa(n.alphabet, output, next)};
}

// beh₁ by plain recursion, recomputing every suffix.
template <SetMonad M>
bool beh_naive(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta, std::size_t q, const Word& w, std::size_t i) {
  if (i == w.size()) return aut.output[q];
  std::vector<std::size_t> table;
  for (std::size_t p = 0; p < aut.state_count(); ++p) table.push_back(beh_naive(aut, beta, p, w, i + 1) ? 1 : 0);
  return beta(M::map(order::FiniteFunction(2, table), aut.next[q][w[i]]));
}

StateSet two(std::initializer_list<std::size_t> xs) { return StateSet(2, xs); }

void require_all_pass(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    INFO(r.to_line());
    CHECK(r.passed());
  }
}

}  // namespace

TEST_CASE("algebras on two: examples") {
  CHECK_FALSE(beta_pow_max(two({})));
  CHECK_FALSE(beta_pow_max(two({0})));
  CHECK(beta_pow_max(two({1})));
  CHECK(beta_pow_max(two({0, 1})));
  CHECK(beta_pow_min(two({})));
  CHECK_FALSE(beta_pow_min(two({0})));
  CHECK(beta_pow_min(two({1})));
  CHECK_FALSE(beta_pow_min(two({0, 1})));
  CHECK_FALSE(beta_alt(monad::alt_unit(2, 0)));
  CHECK(beta_alt(monad::alt_unit(2, 1)));
  CHECK(beta_alt(AltElement::top(2)));
  CHECK_FALSE(beta_alt(AltElement::bottom(2)));
  CHECK_FALSE(beta_alt(AltElement(2, {StateSet::full(2)})));
  CHECK(beta_alt(AltElement(2, {two({0}), two({1})})));
  CHECK_THROWS_AS(beta_pow_max(StateSet(3)), DomainError);
  CHECK_THROWS_AS(beta_alt(AltElement::top(1)), DomainError);
}

TEST_CASE("the Alt algebra is membership of the singleton {1}") {
  for (const auto& e : monad::enumerate_alt(2)) CHECK(beta_alt(e) == e.contains(two({1})));
}

TEST_CASE("the three algebras satisfy the Eilenberg-Moore laws") {
  require_all_pass(check_em_laws(max_algebra()));
  require_all_pass(check_em_laws(min_algebra()));
  const auto alt = check_em_laws(alt_algebra());
  require_all_pass(alt);
  CHECK(alt[0].cases_checked == 2);
}

TEST_CASE("the free algebra on the empty set") {
  const auto r = check_free_algebra_identity();
  CHECK(r.passed());
  CHECK(r.cases_checked == 6);
}

TEST_CASE("strength and the pointwise algebra") {
  // Functions {0,1} -> 2 indexed by their tables.
  const std::vector<std::vector<std::size_t>> fns{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const StateSet e(4, {1, 2});
  CHECK(strength<PowersetMonad>(e, fns, 2, 0) == two({0, 1}));
  CHECK(strength<PowersetMonad>(e, fns, 2, 1) == two({0, 1}));
  CHECK(strength<PowersetMonad>(StateSet(4, {3}), fns, 2, 1) == two({1}));
  CHECK(pointwise_algebra(max_algebra(), e, fns, 2) == std::vector<bool>{true, true});
  CHECK(pointwise_algebra(min_algebra(), e, fns, 2) == std::vector<bool>{false, false});
  CHECK(pointwise_algebra(max_algebra(), StateSet(4), fns, 2) == std::vector<bool>{false, false});
  CHECK(pointwise_algebra(min_algebra(), StateSet(4), fns, 2) == std::vector<bool>{true, true});
  CHECK(pointwise_algebra(max_algebra(), StateSet(4, {1}), fns, 2) == std::vector<bool>{true, false});
  // A fork lands on {1} only when each of its functions sends y to 1.
  const AltElement forks(4, {StateSet(4, {1, 3})});
  CHECK(pointwise_algebra(alt_algebra(), forks, fns, 2) == std::vector<bool>{true, false});
}

TEST_CASE("the distributive law built from an algebra") {
  const std::vector<OutputAndNext> points{{true, {0, 1}}, {false, {1, 1}}};
  const auto both = dist_from_algebra(max_algebra(), StateSet(2, {0, 1}), points, 2, 2);
  CHECK(both.output);
  CHECK(both.next == std::vector<StateSet>{two({0, 1}), two({1})});
  const auto second = dist_from_algebra(max_algebra(), StateSet(2, {1}), points, 2, 2);
  CHECK_FALSE(second.output);
  CHECK(second.next == std::vector<StateSet>{two({1}), two({1})});
  CHECK(dist_from_algebra(min_algebra(), StateSet(2), points, 2, 2).output);
  CHECK_THROWS_AS(dist_from_algebra(max_algebra(), StateSet(2), {{true, {0}}}, 2, 2), DomainError);
}

TEST_CASE("determinizing with the join algebra is the subset construction") {
  for (const auto& n : suite::random_nfas(50, 4, kDefaultSeed)) {
    const auto aut = as_t_automaton(n);
    for (std::size_t q = 0; q < n.state_count(); ++q) {
      const auto machine = determinize(aut, max_algebra(), q);
      const auto oracle = subset_construction(n, q);
      REQUIRE(machine.decode.size() == oracle.subsets.size());
      CHECK(machine.decode == oracle.subsets);
      CHECK(machine.dfa.output == oracle.dfa.output);
      CHECK(machine.dfa.next == oracle.dfa.next);
      CHECK(automata::dfa_equiv(machine.dfa, 0, oracle.dfa, 0).equivalent);
    }
  }
}

TEST_CASE("determinized machines accept the existential and universal languages") {
  for (const auto& n : suite::random_nfas(30, 4, 99)) {
    const auto aut = as_t_automaton(n);
    const auto some = determinize(aut, max_algebra(), 0);
    const auto every = determinize(aut, min_algebra(), 0);
    for (const auto& w : all_words(2, 6)) {
      CHECK(automata::dfa_accepts(some.dfa, 0, w) == automata::nfa_accepts_existential(n, 0, w));
      CHECK(automata::dfa_accepts(every.dfa, 0, w) == automata::nfa_accepts_universal(n, 0, w));
    }
  }
}

TEST_CASE("an NFA with singleton successors determinizes to its own DFA") {
  const automata::Alphabet ab({"a", "b"});
  const Dfa mod3(ab, {true, false, false}, {{1, 0}, {2, 1}, {0, 2}});
  const auto machine = determinize(as_t_automaton(automata::as_nfa(mod3)), max_algebra(), 0);
  REQUIRE(machine.dfa.state_count() == 3);
  for (std::size_t s = 0; s < 3; ++s) {
    REQUIRE(machine.decode[s].count() == 1);
    const std::size_t q = machine.decode[s].first();
    CHECK(machine.dfa.output[s] == mod3.output[q]);
    for (std::size_t a = 0; a < 2; ++a)
      CHECK(machine.decode[machine.dfa.next[s][a]] == StateSet(3, {mod3.next[q][a]}));
  }
  CHECK(automata::dfa_equiv(machine.dfa, 0, mod3, 0).equivalent);
}

TEST_CASE("determinization stops at the state cap") {
  const auto aut = as_t_automaton(automata::parity_afa());
  CHECK_THROWS_AS(determinize(aut, alt_algebra(), 0, 2), CapacityError);
  CHECK_NOTHROW(determinize(aut, alt_algebra(), 0, 3));
  CHECK_THROWS_AS(determinize(aut, alt_algebra(), 5), DomainError);
}

TEST_CASE("the determinized parity automaton") {
  const auto afa = automata::parity_afa();
  const auto machine = determinize(as_t_automaton(afa), alt_algebra(), 0);
  CHECK(machine.dfa.state_count() == 3);
  CHECK(machine.decode[0] == monad::alt_unit(5, 0));
  for (const auto& w : all_words(2, 10)) {
    CHECK(automata::dfa_accepts(machine.dfa, 0, w) == suite::parity_language(w));
    CHECK(automata::dfa_accepts(machine.dfa, 0, w) == automata::afa_accepts(afa, 0, w));
  }
}

TEST_CASE("determinizing with the Alt algebra accepts the alternating language") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto afa = testing::random_afa(1 + i % 4, rng);
    const auto aut = as_t_automaton(afa);
    for (std::size_t q = 0; q < afa.state_count(); ++q) {
      const auto machine = determinize(aut, alt_algebra(), q);
      for (const auto& w : all_words(2, 6)) CHECK(automata::dfa_accepts(machine.dfa, 0, w) == automata::afa_accepts(afa, q, w));
    }
  }
}

TEST_CASE("the inductive semantics matches plain recursion") {
  for (const auto& n : suite::random_nfas(20, 4, 7)) {
    const auto aut = as_t_automaton(n);
    for (std::size_t q = 0; q < n.state_count(); ++q)
      for (const auto& w : all_words(2, 5)) {
        CHECK(beh1(aut, max_algebra(), q, w) == beh_naive(aut, max_algebra(), q, w, 0));
        CHECK(beh1(aut, min_algebra(), q, w) == beh_naive(aut, min_algebra(), q, w, 0));
      }
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto aut = as_t_automaton(testing::random_afa(1 + i % 3, rng));
    for (std::size_t q = 0; q < aut.state_count(); ++q)
      for (const auto& w : all_words(2, 4)) CHECK(beh1(aut, alt_algebra(), q, w) == beh_naive(aut, alt_algebra(), q, w, 0));
  }
  const auto parity = as_t_automaton(automata::parity_afa());
  CHECK_THROWS_AS(beh1(parity, alt_algebra(), 9, {}), DomainError);
  CHECK_THROWS_AS(beh1(parity, alt_algebra(), 0, {3}), DomainError);
}

TEST_CASE("the correspondence and triangle reports") {
  const auto parity = as_t_automaton(automata::parity_afa());
  const auto c = check_semantics_correspondence(parity, alt_algebra(), 0, 8);
  CHECK(c.passed());
  CHECK(c.cases_checked == 511);
  CHECK(c.diagram == "correspondence[alt,q0]");
  const auto t = check_powerset_triangle(parity, alt_algebra());
  CHECK(t.passed());
  CHECK(t.cases_checked == 5);
  for (const auto& n : suite::random_nfas(10, 4, 3)) {
    CHECK(check_powerset_triangle(as_t_automaton(n), max_algebra()).passed());
    CHECK(check_powerset_triangle(as_t_automaton(n), min_algebra()).passed());
  }
}

TEST_CASE("the semantics suite passes") {
  for (const auto& s : suite::run_semantics_suite()) {
    INFO(s.name);
    CHECK(s.as_expected());
    CHECK_FALSE(s.failed());
  }
}
