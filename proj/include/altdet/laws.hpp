#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "altdet/law_report.hpp"
#include "altdet/set_monad.hpp"
#include "altdet/updown.hpp"

namespace altdet::laws {

using monad::Direction;
using monad::SetMonad;
using order::FiniteFunction;
using order::FinitePoset;

/// A fixed input space for one diagram: either every element in order, or draws from a
/// per-case generator.
template <class In>
struct Inputs {
  CheckMode mode = CheckMode::exhaustive;
  std::size_t count = 0;
  std::function<In(std::size_t)> at;
};

/// Compares `lhs(x)` and `rhs(x)` on every input.
template <class In, class Lhs, class Rhs, class ShowIn, class ShowOut>
LawReport check_paths(std::string id, const Inputs<In>& inputs, const HarnessOptions& opts, Lhs lhs,
                      Rhs rhs, ShowIn show_in, ShowOut show_out) {
  return run_diagram(
      std::move(id), inputs.mode, opts, inputs.count,
      [&](std::size_t i) {
        const In x = inputs.at(i);
        return lhs(x) == rhs(x);
      },
      [&](std::size_t i) {
        const In x = inputs.at(i);
        return Counterexample{show_in(x), show_out(lhs(x)), show_out(rhs(x))};
      });
}

/// Every element of a vector, in order.
template <class In>
Inputs<In> all_of(std::vector<In> items) {
  auto shared = std::make_shared<const std::vector<In>>(std::move(items));
  return {CheckMode::exhaustive, shared->size(), [shared](std::size_t i) { return (*shared)[i]; }};
}

/// `opts.sample_count` draws of `draw(rng)`, each case with its own stream.
template <class In, class Draw>
Inputs<In> sampled(const HarnessOptions& opts, Draw draw) {
  const auto seed = opts.seed;
  return {CheckMode::sampled, opts.sample_count, [seed, draw](std::size_t i) {
            auto rng = case_rng(seed, i);
            return draw(rng);
          }};
}

/// Enumerated when small enough (uniform draws from the list under force_sampled), else `draw`.
template <class In, class Draw>
Inputs<In> enumerated_or_sampled(const HarnessOptions& opts, std::optional<std::vector<In>> items,
                                 Draw draw) {
  if (items && !opts.force_sampled) return all_of(std::move(*items));
  if (items) {
    auto shared = std::make_shared<const std::vector<In>>(std::move(*items));
    return sampled<In>(opts, [shared](std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> pick(0, shared->size() - 1);
      return (*shared)[pick(rng)];
    });
  }
  return sampled<In>(opts, draw);
}

/// An element of T(T(T X)) over local carriers.
template <class E>
struct Level3 {
  E top;                  // over middles.size()
  std::vector<E> middles;  // each over base.size()
  std::vector<E> base;     // each over the carrier X
};

template <SetMonad M>
std::optional<std::vector<typename M::Element>> enumerate_within(std::size_t n, std::size_t cap) {
  const auto c = M::count(n);
  if (!c || *c > cap) return std::nullopt;
  return M::enumerate(n);
}

template <class E, class Show>
std::string show_list(const std::vector<E>& xs, Show show) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += show(xs[i]);
  }
  return out + "]";
}

/// Unit laws and associativity of a set monad at |X| = n.
///
/// Associativity runs over the whole of T³X when it enumerates under the cap. Otherwise, if
/// TX and T²X enumerate, the top layer is covered by the monad's join generators: both paths
/// preserve unions in the top argument, so agreement on generators gives agreement everywhere.
/// Failing that, whole T³X elements are sampled over small local carriers.
template <SetMonad M>
std::vector<LawReport> check_set_monad_laws(std::size_t n, const HarnessOptions& opts = {}) {
  using E = typename M::Element;
  const std::string prefix = std::string(M::name) + "[" + std::to_string(n) + "].";
  const auto show = [](const E& e) { return M::show(e); };
  std::vector<LawReport> reports;

  auto tx = enumerate_within<M>(n, opts.exhaustive_cap);
  const auto draw_tx = [n](std::mt19937_64& rng) { return M::sample(n, rng); };
  const Inputs<E> unit_inputs = enumerated_or_sampled<E>(opts, tx, draw_tx);

  reports.push_back(check_paths(
      prefix + "unit-left", unit_inputs, opts,
      [n](const E& t) {
        const E outer = M::unit(1, 0);
        return M::mult(n, outer, std::span<const E>(&t, 1));
      },
      [](const E& t) { return t; }, show, show));

  std::vector<E> units;
  for (std::size_t x = 0; x < n; ++x) units.push_back(M::unit(n, x));
  reports.push_back(check_paths(
      prefix + "unit-right", unit_inputs, opts, [&](const E& t) { return M::mult(n, t, units); },
      [](const E& t) { return t; }, show, show));

  using L3 = Level3<E>;
  const auto lhs = [n](const L3& s) {
    std::vector<E> flattened;
    flattened.reserve(s.middles.size());
    for (const auto& m : s.middles) flattened.push_back(M::mult(n, m, s.base));
    return M::mult(n, s.top, flattened);
  };
  const auto rhs = [n](const L3& s) {
    return M::mult(n, M::mult(s.base.size(), s.top, s.middles), s.base);
  };
  const auto show3 = [show](const L3& s) {
    return "top=" + M::show(s.top) + ",middles=" + show_list(s.middles, show) +
           ",base=" + show_list(s.base, show);
  };

  std::optional<std::vector<E>> ttx;
  if (tx && tx->size() <= StateSet::kMaxCarrier) ttx = enumerate_within<M>(tx->size(), opts.exhaustive_cap);
  if (ttx && ttx->size() <= StateSet::kMaxCarrier && !opts.force_sampled) {
    const std::size_t k = ttx->size();
    auto base = std::make_shared<const std::vector<E>>(*tx);
    auto middles = std::make_shared<const std::vector<E>>(*ttx);
    // Precomputed μ of each middle element, shared by every case.
    std::vector<E> flat;
    for (const auto& m : *middles) flat.push_back(M::mult(n, m, *base));
    const auto lhs_fast = [&](const E& top) { return M::mult(n, top, flat); };
    const auto rhs_fast = [&](const E& top) { return M::mult(n, M::mult(base->size(), top, *middles), *base); };

    Inputs<E> inputs;
    if (auto tops = enumerate_within<M>(k, opts.exhaustive_cap)) {
      inputs = all_of(std::move(*tops));
    } else if (auto g = M::generator_count(k, opts.generator_bound)) {
      inputs = {CheckMode::exhaustive, *g, [k](std::size_t i) { return M::generator(k, i); }};
    } else {
      inputs = sampled<E>(opts, [k](std::mt19937_64& rng) { return M::sample(k, rng); });
    }
    // The middle and base layers are the same in every case, so the witness shows only the top.
    reports.push_back(check_paths(prefix + "assoc", inputs, opts, lhs_fast, rhs_fast, show, show));
    return reports;
  }

  const auto draw3 = [n](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> width(1, 4);
    L3 s;
    const std::size_t b = width(rng), m = width(rng);
    for (std::size_t i = 0; i < b; ++i) s.base.push_back(M::sample(n, rng));
    for (std::size_t i = 0; i < m; ++i) s.middles.push_back(M::sample(b, rng));
    s.top = M::sample(m, rng);
    return s;
  };
  reports.push_back(check_paths(prefix + "assoc", sampled<L3>(opts, draw3), opts, lhs, rhs, show3, show));
  return reports;
}

/// Identity and composition laws of T as a functor, over all functions between carriers <= max_n.
template <SetMonad M>
std::vector<LawReport> check_functor_laws(std::size_t max_n, const HarnessOptions& opts = {}) {
  using E = typename M::Element;
  const std::string prefix = std::string(M::name) + ".functor-";
  const auto show = [](const E& e) { return M::show(e); };

  struct Case {
    FiniteFunction f, g;
    E e;
  };
  std::vector<std::pair<std::size_t, E>> identity_cases;
  std::vector<Case> compose_cases;
  for (std::size_t a = 0; a <= max_n; ++a) {
    auto elems = enumerate_within<M>(a, opts.exhaustive_cap);
    if (!elems) continue;
    for (const auto& e : *elems) identity_cases.emplace_back(a, e);
    for (std::size_t b = 0; b <= max_n; ++b)
      for (std::size_t c = 0; c <= max_n; ++c)
        for (const auto& f : order::all_functions(a, b))
          for (const auto& g : order::all_functions(b, c))
            for (const auto& e : *elems) compose_cases.push_back({f, g, e});
  }
  std::vector<LawReport> reports;
  reports.push_back(check_paths(
      prefix + "identity", all_of(identity_cases), opts,
      [](const std::pair<std::size_t, E>& c) { return M::map(FiniteFunction::identity(c.first), c.second); },
      [](const std::pair<std::size_t, E>& c) { return c.second; },
      [](const std::pair<std::size_t, E>& c) { return M::show(c.second); }, show));
  reports.push_back(check_paths(
      prefix + "composition", all_of(compose_cases), opts,
      [](const Case& k) { return M::map(k.g.after(k.f), k.e); },
      [](const Case& k) { return M::map(k.g, M::map(k.f, k.e)); },
      [](const Case& k) { return "f=" + k.f.to_string() + ",g=" + k.g.to_string() + ",e=" + M::show(k.e); },
      show));
  return reports;
}

// Up and Dn on posets.

/// Unit and associativity laws of Up or Dn on `poset`; `label` names the poset in diagram ids.
std::vector<LawReport> check_poset_monad_laws(Direction d, const FinitePoset& poset, const std::string& label,
                                              const HarnessOptions& opts = {});

/// Functor laws of Up or Dn over all monotone maps between posets of size <= max_n.
std::vector<LawReport> check_poset_functor_laws(Direction d, std::size_t max_n,
                                                const HarnessOptions& opts = {});

/// The four compatibility diagrams of λ: Dn∘Up ⇒ Up∘Dn on `poset`.
std::vector<LawReport> check_dist_law(const FinitePoset& poset, const std::string& label,
                                      const HarnessOptions& opts = {});

/// Naturality of λ over every monotone map between posets of size <= max_n.
LawReport check_dist_naturality(std::size_t max_n, const HarnessOptions& opts = {});

/// Naturality of η for Alt, and agreement of the staged μ with the direct one.
LawReport check_alt_unit_naturality(std::size_t max_n, const HarnessOptions& opts = {});
LawReport check_alt_pipeline(std::size_t n, const HarnessOptions& opts = {});

/// Dn(Do X) is the powerset of X, for |X| <= max_n.
LawReport check_dn_discrete_is_powerset(std::size_t max_n, const HarnessOptions& opts = {});

// The failed candidates.

/// Naturality of cnf_exact or cnf_atleast over every f: X -> Y with min_n <= |X| <= max_n, 1 <= |Y| <= max_n,
/// and every S ⊆ P(X). The first failing case in enumeration order is reported.
LawReport check_cnf_naturality(bool exact, std::size_t min_n, std::size_t max_n, const HarnessOptions& opts = {});

/// The four monad-over-monad diagrams for cnf_atleast as an exchange P∘P ⇒ P∘P, at |X| = n.
std::vector<LawReport> check_atleast_exchange(std::size_t n, const HarnessOptions& opts = {});

}  // namespace altdet::laws
