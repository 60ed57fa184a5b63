#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "altdet/automata.hpp"
#include "altdet/errors.hpp"
#include "altdet/laws.hpp"
#include "altdet/set_monad.hpp"

namespace altdet::semantics {

using automata::Alphabet;
using automata::Dfa;
using automata::Word;
using monad::AltMonad;
using monad::PowersetMonad;
using monad::SetMonad;

inline constexpr std::size_t kDefaultStateCap = 50'000;

/// Coalgebra for 2 × T(−)^A.
template <SetMonad M>
struct TAutomaton {
  using Element = typename M::Element;
  Alphabet alphabet;
  std::vector<bool> output;
  std::vector<std::vector<Element>> next;  // next[q][a] over the state carrier

  std::size_t state_count() const noexcept { return output.size(); }
};

TAutomaton<PowersetMonad> as_t_automaton(const automata::Nfa& n);
TAutomaton<AltMonad> as_t_automaton(const automata::Afa& a);

/// An Eilenberg–Moore algebra T(2) -> 2, with T(2) over the carrier {0, 1}.
template <SetMonad M>
struct AlgebraOnTwo {
  std::string name;
  std::function<bool(const typename M::Element&)> evaluate;

  bool operator()(const typename M::Element& e) const { return evaluate(e); }
};

/// Join and meet on 2; max(∅) = 0, min(∅) = 1.
bool beta_pow_max(const StateSet& s);
bool beta_pow_min(const StateSet& s);
/// 1 iff {1} belongs to the expanded family.
bool beta_alt(const monad::AltElement& e);

AlgebraOnTwo<PowersetMonad> max_algebra();
AlgebraOnTwo<PowersetMonad> min_algebra();
AlgebraOnTwo<AltMonad> alt_algebra();

/// T(2) -> 2 as a function table over an indexed list of T(2) elements.
template <SetMonad M>
order::FiniteFunction algebra_table(const AlgebraOnTwo<M>& beta, const std::vector<typename M::Element>& elems) {
  std::vector<std::size_t> table;
  for (const auto& e : elems) table.push_back(beta(e) ? 1 : 0);
  return order::FiniteFunction(2, std::move(table));
}

/// Unit law β ∘ η = id on {0, 1} and multiplication law β ∘ T(β) = β ∘ μ on T(T 2).
template <SetMonad M>
std::vector<LawReport> check_em_laws(const AlgebraOnTwo<M>& beta, const HarnessOptions& opts = {}) {
  using E = typename M::Element;
  const std::string prefix = beta.name + ".";
  const auto show_bit = [](bool b) { return std::string(b ? "1" : "0"); };
  std::vector<LawReport> reports;
  reports.push_back(laws::check_paths(
      prefix + "em-unit", laws::all_of(std::vector<std::size_t>{0, 1}), opts,
      [&](std::size_t b) { return beta(M::unit(2, b)); }, [](std::size_t b) { return b == 1; },
      [](std::size_t b) { return std::to_string(b); }, show_bit));

  const std::vector<E> t2 = M::enumerate(2);
  const auto t_beta = algebra_table(beta, t2);
  auto ttwo = laws::enumerate_within<M>(t2.size(), opts.exhaustive_cap);
  const std::size_t k = t2.size();
  const auto inputs = laws::enumerated_or_sampled<E>(opts, std::move(ttwo),
                                                     [k](std::mt19937_64& rng) { return M::sample(k, rng); });
  reports.push_back(laws::check_paths(
      prefix + "em-mult", inputs, opts, [&](const E& s) { return beta(M::map(t_beta, s)); },
      [&](const E& s) { return beta(M::mult(2, s, t2)); }, [](const E& s) { return M::show(s); }, show_bit));
  return reports;
}

/// st(e)(y) = T(h ↦ h(y))(e), where `functions[i]` is the table of the i-th function Y -> X.
template <SetMonad M>
typename M::Element strength(const typename M::Element& e, const std::vector<std::vector<std::size_t>>& functions,
                             std::size_t x_size, std::size_t y) {
  std::vector<std::size_t> eval;
  eval.reserve(functions.size());
  for (const auto& h : functions) eval.push_back(h.at(y));
  return M::map(order::FiniteFunction(x_size, std::move(eval)), e);
}

/// β̂(e)(y) = β(st(e)(y)) for e over the indexed functions Y -> 2.
template <SetMonad M>
std::vector<bool> pointwise_algebra(const AlgebraOnTwo<M>& beta, const typename M::Element& e,
                                    const std::vector<std::vector<std::size_t>>& functions, std::size_t y_size) {
  std::vector<bool> out(y_size);
  for (std::size_t y = 0; y < y_size; ++y) out[y] = beta(strength<M>(e, functions, 2, y));
  return out;
}

/// One point of 2 × Y^A: an output bit and a successor per letter.
struct OutputAndNext {
  bool output = false;
  std::vector<std::size_t> next;
};

template <SetMonad M>
struct DistResult {
  bool output = false;
  std::vector<typename M::Element> next;  // one T(Y) element per letter
};

/// λ = (β × st) ∘ ⟨Tπ₁, Tπ₂⟩ on an element of T(2 × Y^A) over the indexed `points`.
template <SetMonad M>
DistResult<M> dist_from_algebra(const AlgebraOnTwo<M>& beta, const typename M::Element& e,
                                const std::vector<OutputAndNext>& points, std::size_t y_size,
                                std::size_t letters) {
  std::vector<std::size_t> first;
  std::vector<std::vector<std::size_t>> second;
  for (const auto& p : points) {
    if (p.next.size() != letters) throw DomainError("dist_from_algebra: point with the wrong number of letters");
    first.push_back(p.output ? 1 : 0);
    second.push_back(p.next);
  }
  DistResult<M> out;
  out.output = beta(M::map(order::FiniteFunction(2, std::move(first)), e));
  for (std::size_t a = 0; a < letters; ++a) out.next.push_back(strength<M>(e, second, y_size, a));
  return out;
}

/// The reachable part of the determinized machine, with the T(X) element behind each state.
template <SetMonad M>
struct DeterminizedMachine {
  Dfa dfa;
  std::vector<typename M::Element> decode;
};

/// One step of F_EM(f) = G(μ) ∘ λ_{T X} ∘ T(f) at the state Φ ∈ T(X).
template <SetMonad M>
DistResult<M> determinized_step(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta,
                                const typename M::Element& phi) {
  using E = typename M::Element;
  const std::size_t n = aut.state_count();
  const std::size_t k = aut.alphabet.size();
  // T(f) sends q to (o(q), a ↦ δ(q)(a)); the second component indexes the table of all δ(q)(a).
  std::vector<OutputAndNext> points(n);
  std::vector<E> successors;
  successors.reserve(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    points[q].output = aut.output[q];
    for (std::size_t a = 0; a < k; ++a) {
      points[q].next.push_back(successors.size());
      successors.push_back(aut.next[q][a]);
    }
  }
  DistResult<M> swapped = dist_from_algebra<M>(beta, phi, points, successors.size(), k);
  for (auto& t : swapped.next) t = M::mult(n, t, successors);
  return swapped;
}

/// Breadth-first generalized powerset construction from η(start). CapacityError past `cap` states.
template <SetMonad M>
DeterminizedMachine<M> determinize(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta, std::size_t start,
                                   std::size_t cap = kDefaultStateCap) {
  using E = typename M::Element;
  if (start >= aut.state_count()) throw DomainError("determinize: start state out of range");
  const std::size_t k = aut.alphabet.size();
  std::map<E, std::size_t> index;
  std::vector<E> decode{M::unit(aut.state_count(), start)};
  index.emplace(decode[0], 0);
  std::vector<bool> output;
  std::vector<std::vector<std::size_t>> next;
  for (std::size_t s = 0; s < decode.size(); ++s) {
    DistResult<M> step = determinized_step<M>(aut, beta, decode[s]);
    output.push_back(step.output);
    std::vector<std::size_t> row(k);
    for (std::size_t a = 0; a < k; ++a) {
      auto [it, fresh] = index.emplace(step.next[a], decode.size());
      if (fresh) {
        if (decode.size() >= cap)
          throw CapacityError("determinization exceeded the cap of " + std::to_string(cap) + " states");
        decode.push_back(step.next[a]);
      }
      row[a] = it->second;
    }
    next.push_back(std::move(row));
  }
  return {Dfa(aut.alphabet, std::move(output), std::move(next)), std::move(decode)};
}

/// The inductive semantics: ε ↦ o(q); a·w ↦ β(T(q' ↦ beh₁(q', w))(δ(q)(a))).
template <SetMonad M>
bool beh1(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta, std::size_t q, const Word& w) {
  const std::size_t n = aut.state_count();
  if (q >= n) throw DomainError("beh1: state out of range");
  for (auto a : w)
    if (a >= aut.alphabet.size()) throw DomainError("beh1: symbol not in the alphabet");
  std::vector<std::size_t> acc(n);
  for (std::size_t p = 0; p < n; ++p) acc[p] = aut.output[p] ? 1 : 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    const order::FiniteFunction lang(2, acc);
    std::vector<std::size_t> prev(n);
    for (std::size_t p = 0; p < n; ++p) prev[p] = beta(M::map(lang, aut.next[p][w[i]])) ? 1 : 0;
    acc = std::move(prev);
  }
  return acc[q] == 1;
}

/// beh₂ ∘ η = beh₁ at `q` on every word of length <= max_len.
template <SetMonad M>
LawReport check_semantics_correspondence(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta, std::size_t q,
                                         std::size_t max_len, const HarnessOptions& opts = {},
                                         std::size_t cap = kDefaultStateCap) {
  const auto machine = determinize<M>(aut, beta, q, cap);
  const auto words = automata::all_words(aut.alphabet.size(), max_len);
  const auto bit = [](bool b) { return std::string(b ? "1" : "0"); };
  return laws::check_paths(
      "correspondence[" + beta.name + ",q" + std::to_string(q) + "]", laws::all_of(words), opts,
      [&](const Word& w) { return automata::dfa_accepts(machine.dfa, 0, w); },
      [&](const Word& w) { return beh1<M>(aut, beta, q, w); },
      [&](const Word& w) { return "\"" + automata::format_word(aut.alphabet, w) + "\""; }, bit);
}

/// F_EM(f) ∘ η = λ-composite ∘ f: from η(q) the determinized machine outputs o(q) and moves to δ(q)(a).
template <SetMonad M>
LawReport check_powerset_triangle(const TAutomaton<M>& aut, const AlgebraOnTwo<M>& beta,
                                  const HarnessOptions& opts = {}) {
  std::vector<std::size_t> states(aut.state_count());
  for (std::size_t q = 0; q < states.size(); ++q) states[q] = q;
  const auto show = [&](const std::pair<bool, std::vector<typename M::Element>>& r) {
    return std::string(r.first ? "1" : "0") + "," + laws::show_list(r.second, [](const auto& e) { return M::show(e); });
  };
  return laws::check_paths(
      "powerset-triangle[" + beta.name + "]", laws::all_of(states), opts,
      [&](std::size_t q) {
        auto step = determinized_step<M>(aut, beta, M::unit(aut.state_count(), q));
        return std::make_pair(step.output, step.next);
      },
      [&](std::size_t q) { return std::make_pair(static_cast<bool>(aut.output[q]), aut.next[q]); },
      [](std::size_t q) { return "q" + std::to_string(q); }, show);
}

/// |Alt(∅)| = 2 and β = μ_∅ under ∅ ↦ 0, {∅} ↦ 1, on every element of Alt(Alt(∅)).
LawReport check_free_algebra_identity(const HarnessOptions& opts = {});

}  // namespace altdet::semantics
