#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "altdet/antichain.hpp"
#include "altdet/poset.hpp"
#include "altdet/state_set.hpp"

namespace altdet::monad {

using order::Antichain;
using order::FiniteFunction;

/// An element of Alt(X): an ⊆-upward-closed family of subsets of X, kept as its minimal forks.
class AltElement {
 public:
  AltElement() = default;
  /// Normalizes `family` to its minimal members; every member must lie within the carrier.
  AltElement(std::size_t carrier, std::vector<StateSet> family);

  /// The empty family.
  static AltElement bottom(std::size_t carrier) { return AltElement(carrier, {}); }
  /// All subsets, i.e. the single fork ∅.
  static AltElement top(std::size_t carrier) { return AltElement(carrier, {StateSet(carrier)}); }

  std::size_t carrier_size() const noexcept { return carrier_; }
  const Antichain& forks() const noexcept { return forks_; }

  /// Membership of `t` in the expanded family.
  bool contains(const StateSet& t) const noexcept { return forks_.covers(t); }
  /// Every member of the up-closed family (carrier <= 20).
  std::vector<StateSet> expanded() const;

  friend bool operator==(const AltElement&, const AltElement&) = default;
  friend std::strong_ordering operator<=>(const AltElement& a, const AltElement& b) {
    if (auto c = a.carrier_ <=> b.carrier_; c != 0) return c;
    return a.forks_ <=> b.forks_;
  }

  std::size_t hash() const noexcept { return forks_.hash() * 31 + carrier_; }
  std::string to_string() const { return forks_.to_string(); }

 private:
  std::size_t carrier_ = 0;
  Antichain forks_;
};

struct AltElementHash {
  std::size_t operator()(const AltElement& e) const noexcept { return e.hash(); }
};

/// ↑{x} = {T ⊆ X | x ∈ T}
AltElement alt_unit(std::size_t carrier, std::size_t x);

/// Alt(f): image of every fork, then minimize.
AltElement alt_map(const FiniteFunction& f, const AltElement& e);

/// μ for an element of Alt(Alt X) whose forks index into `inner` (one Alt(X) element per point
/// of e's carrier): the union over forks s of the intersection of the families inner[t], t ∈ s.
AltElement alt_mult(std::size_t carrier, const AltElement& e, std::span<const AltElement> inner);

/// μ with `e` indexing into enumerate_alt(carrier).
AltElement alt_mult(std::size_t carrier, const AltElement& e);

/// |Alt(X)| for |X| = n (Dedekind numbers), known for n <= 6.
std::optional<std::size_t> alt_count(std::size_t n);

/// All elements of Alt(X), sorted. n <= 5, otherwise CapacityError.
const std::vector<AltElement>& enumerate_alt(std::size_t n);

/// Index of `e` in enumerate_alt(e.carrier_size()).
std::size_t alt_index(const AltElement& e);

/// μ computed in stages: counit retyping, Up(Dn ε), Up(λ), Up-union, Up(Dn-union).
/// `e` indexes into enumerate_alt(carrier). Carrier <= 2 (the Up(Dn(Dn P(X))) layer
/// exceeds the 256-point carrier bound above that), otherwise CapacityError.
AltElement composite_mult_via_pipeline(std::size_t carrier, const AltElement& e);

/// Random antichain: 0..4 forks, each of a uniformly chosen size 0..carrier, minimized.
AltElement random_alt(std::size_t carrier, std::mt19937_64& rng);

}  // namespace altdet::monad
