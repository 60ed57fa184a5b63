#include "altdet/semantics.hpp"

namespace altdet::semantics {

TAutomaton<PowersetMonad> as_t_automaton(const automata::Nfa& n) { return {n.alphabet, n.output, n.next}; }

TAutomaton<AltMonad> as_t_automaton(const automata::Afa& a) { return {a.alphabet, a.output, a.next}; }

namespace {

void require_two(std::size_t carrier, const char* who) {
  if (carrier != 2)
    throw DomainError(std::string(who) + ": element over " + std::to_string(carrier) + " points, expected {0,1}");
}

}  // namespace

bool beta_pow_max(const StateSet& s) {
  require_two(s.carrier_size(), "beta_pow_max");
  return s.contains(1);
}

bool beta_pow_min(const StateSet& s) {
  require_two(s.carrier_size(), "beta_pow_min");
  return !s.contains(0);
}

bool beta_alt(const monad::AltElement& e) {
  require_two(e.carrier_size(), "beta_alt");
  const StateSet one(2, {1});
  for (const auto& t : e.expanded())
    if (t == one) return true;
  return false;
}

AlgebraOnTwo<PowersetMonad> max_algebra() { return {"max", beta_pow_max}; }
AlgebraOnTwo<PowersetMonad> min_algebra() { return {"min", beta_pow_min}; }
AlgebraOnTwo<AltMonad> alt_algebra() { return {"alt", beta_alt}; }

LawReport check_free_algebra_identity(const HarnessOptions& opts) {
  using monad::AltElement;
  const auto& alt0 = monad::enumerate_alt(0);
  if (alt0.size() != 2 || !(alt0[0] == AltElement::bottom(0)) || !(alt0[1] == AltElement::top(0))) {
    LawReport r;
    r.diagram = "free-algebra";
    r.cases_checked = 1;
    r.seed = opts.seed;
    r.counterexample = Counterexample{"Alt(0)", std::to_string(alt0.size()) + " elements", "2 elements"};
    return r;
  }
  // ι indexes Alt(∅) as [∅, {∅}], so ι(i) = i and Alt(ι) leaves forks unchanged.
  const auto iota = [&](const AltElement& e) { return monad::alt_index(e) == 1; };
  const auto bit = [](bool b) { return std::string(b ? "1" : "0"); };
  return laws::check_paths(
      "free-algebra", laws::all_of(monad::enumerate_alt(2)), opts, [](const AltElement& s) { return beta_alt(s); },
      [&](const AltElement& s) { return iota(monad::alt_mult(0, s)); },
      [](const AltElement& s) { return s.to_string(); }, bit);
}

}  // namespace altdet::semantics
