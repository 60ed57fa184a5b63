#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "altdet/state_set.hpp"

namespace altdet::order {

/// A family of pairwise ⊆-incomparable sets, stored sorted in StateSet order.
///
/// Only minimal_elements() builds non-empty antichains, so equal antichains always
/// have identical storage.
class Antichain {
 public:
  Antichain() = default;

  const std::vector<StateSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  /// True iff some member is a subset of `s`, i.e. `s` lies in the ⊆-up-closure.
  bool covers(const StateSet& s) const noexcept {
    for (const auto& a : sets_)
      if (a.is_subset_of(s)) return true;
    return false;
  }

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend std::strong_ordering operator<=>(const Antichain& a, const Antichain& b) {
    return std::lexicographical_compare_three_way(a.sets_.begin(), a.sets_.end(),
                                                  b.sets_.begin(), b.sets_.end());
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  friend Antichain minimal_elements(std::vector<StateSet> family);
  std::vector<StateSet> sets_;
};

/// The ⊆-minimal members of `family`, canonically ordered. Idempotent.
Antichain minimal_elements(std::vector<StateSet> family);

/// All supersets (within {0..carrier-1}) of members of `a`, sorted. carrier <= 20.
std::vector<StateSet> expand_antichain(std::size_t carrier, const Antichain& a);

/// Antichain of the union of the two up-closed families.
Antichain family_join(const Antichain& a, const Antichain& b);
/// Antichain of the intersection of the two up-closed families: minimal {x ∪ y}.
Antichain family_meet(const Antichain& a, const Antichain& b);

}  // namespace altdet::order
