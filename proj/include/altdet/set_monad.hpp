#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "altdet/alt.hpp"
#include "altdet/candidates.hpp"
#include "altdet/flat_set.hpp"
#include "altdet/powerset.hpp"

namespace altdet::monad {

/// A monad on finite sets, with its elements enumerable or sampleable per carrier size.
///
/// mult(n, top, inner) flattens an element of T(T X) given as `top` over local indices
/// 0..k-1 together with the T(X) element each index stands for.
template <class M>
concept SetMonad = requires(std::size_t n, const typename M::Element& e,
                            std::span<const typename M::Element> inner, const FiniteFunction& f,
                            std::mt19937_64& rng) {
  { M::name } -> std::convertible_to<std::string>;
  { M::unit(n, n) } -> std::same_as<typename M::Element>;
  { M::map(f, e) } -> std::same_as<typename M::Element>;
  { M::mult(n, e, inner) } -> std::same_as<typename M::Element>;
  { M::count(n) } -> std::same_as<std::optional<std::size_t>>;
  { M::enumerate(n) } -> std::same_as<std::vector<typename M::Element>>;
  { M::sample(n, rng) } -> std::same_as<typename M::Element>;
  { M::generator_count(n, n) } -> std::same_as<std::optional<std::size_t>>;
  { M::generator(n, n) } -> std::same_as<typename M::Element>;
  { M::show(e) } -> std::convertible_to<std::string>;
};

namespace detail {

inline std::optional<std::size_t> pow2(std::size_t k) {
  if (k >= 63) return std::nullopt;
  return std::size_t{1} << k;
}

inline StateSet random_subset(std::size_t n, std::mt19937_64& rng) {
  StateSet s(n);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

}  // namespace detail

struct PowersetMonad {
  using Element = StateSet;
  static constexpr const char* name = "powerset";

  static Element unit(std::size_t n, std::size_t x) { return pow_unit(n, x); }
  static Element map(const FiniteFunction& f, const Element& e) { return pow_map(f, e); }
  static Element mult(std::size_t n, const Element& top, std::span<const Element> inner) {
    return pow_mult(n, top, inner);
  }
  static std::optional<std::size_t> count(std::size_t n) { return detail::pow2(n); }
  static std::vector<Element> enumerate(std::size_t n) { return all_subsets(n); }
  static Element sample(std::size_t n, std::mt19937_64& rng) { return detail::random_subset(n, rng); }
  /// Every subset is a union of ∅ and singletons.
  static std::optional<std::size_t> generator_count(std::size_t k, std::size_t) { return k + 1; }
  static Element generator(std::size_t k, std::size_t i) {
    return i == 0 ? StateSet(k) : StateSet(k, {i - 1});
  }
  static std::string show(const Element& e) { return e.to_string(); }
};

struct AltMonad {
  using Element = AltElement;
  static constexpr const char* name = "alt";

  static Element unit(std::size_t n, std::size_t x) { return alt_unit(n, x); }
  static Element map(const FiniteFunction& f, const Element& e) { return alt_map(f, e); }
  static Element mult(std::size_t n, const Element& top, std::span<const Element> inner) {
    return alt_mult(n, top, inner);
  }
  static std::optional<std::size_t> count(std::size_t n) { return alt_count(n); }
  static std::vector<Element> enumerate(std::size_t n) { return enumerate_alt(n); }
  static Element sample(std::size_t n, std::mt19937_64& rng) { return random_alt(n, rng); }
  /// Every up-closed family is a union of ∅ and principal families ↑{s}.
  static std::optional<std::size_t> generator_count(std::size_t k, std::size_t bound) {
    if (k > bound) return std::nullopt;
    return (std::size_t{1} << k) + 1;
  }
  static Element generator(std::size_t k, std::size_t i) {
    if (i == 0) return AltElement::bottom(k);
    return AltElement(k, {StateSet::from_mask(k, i - 1)});
  }
  static std::string show(const Element& e) { return e.to_string(); }
};

/// P∘P with μ = P(∪) ∘ ∪ ∘ P(cnf_atleast); not a monad.
struct AtLeastOneCandidate {
  using Element = Family;
  static constexpr const char* name = "pp-atleast";

  static Element unit(std::size_t n, std::size_t x) { return Family{StateSet(n, {x})}; }
  static Element map(const FiniteFunction& f, const Element& e) {
    std::vector<StateSet> out;
    for (const auto& u : e) out.push_back(f.image(u));
    return Family(std::move(out));
  }
  static Element mult(std::size_t n, const Element& top, std::span<const Element> inner) {
    std::vector<StateSet> out;
    for (const auto& u : top) {
      if (u.carrier_size() != inner.size()) throw DomainError("pp-atleast mult: carrier mismatch");
      FlatSet<Family> chosen;
      u.for_each([&](std::size_t i) { chosen.insert(inner[i]); });
      for (const auto& v : cnf_atleast(chosen)) {
        StateSet joined(n);
        for (const auto& w : v) joined |= w;
        out.push_back(joined);
      }
    }
    return Family(std::move(out));
  }
  static std::optional<std::size_t> count(std::size_t n) {
    auto inner = detail::pow2(n);
    if (!inner) return std::nullopt;
    return detail::pow2(*inner);
  }
  static std::vector<Element> enumerate(std::size_t n) {
    const auto subsets = all_subsets(n);
    std::vector<Element> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
      std::vector<StateSet> members;
      for (std::size_t i = 0; i < subsets.size(); ++i)
        if ((mask >> i) & 1U) members.push_back(subsets[i]);
      out.emplace_back(std::move(members));
    }
    return out;
  }
  static Element sample(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(0, 4);
    std::vector<StateSet> members;
    for (std::size_t i = size(rng); i > 0; --i) members.push_back(detail::random_subset(n, rng));
    return Family(std::move(members));
  }
  static std::optional<std::size_t> generator_count(std::size_t, std::size_t) { return std::nullopt; }
  static Element generator(std::size_t k, std::size_t) { return Family{StateSet(k)}; }
  static std::string show(const Element& e) { return to_string(e); }
};

static_assert(SetMonad<PowersetMonad>);
static_assert(SetMonad<AltMonad>);
static_assert(SetMonad<AtLeastOneCandidate>);

}  // namespace altdet::monad
