#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "altdet/errors.hpp"
#include "altdet/flat_set.hpp"
#include "altdet/state_set.hpp"

// The two naive exchanges P∘P ⇒ P∘P. Neither yields a monad on P∘P; they are kept as
// subjects for the negative law checks.

namespace altdet::monad {

inline constexpr std::size_t kCandidateUnionBound = 20;

namespace detail {

template <class Inner>
std::vector<typename Inner::value_type> members_of(const Inner& u) {
  return u.items();
}

inline std::vector<std::size_t> members_of(const StateSet& u) { return u.members(); }

template <class Inner>
Inner subset_of(const Inner&, const std::vector<typename Inner::value_type>& points, std::uint64_t mask) {
  std::vector<typename Inner::value_type> chosen;
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((mask >> i) & 1U) chosen.push_back(points[i]);
  return Inner(std::move(chosen));
}

inline StateSet subset_of(const StateSet& like, const std::vector<std::size_t>& points, std::uint64_t mask) {
  StateSet out(like.carrier_size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if ((mask >> i) & 1U) out.insert(points[i]);
  return out;
}

// {V ⊆ ∪S | ∀U ∈ S, keep(|V ∩ U|)}; `empty` is the empty Inner value (fixes the carrier).
template <class Inner, class Keep>
FlatSet<Inner> cnf_filter(const FlatSet<Inner>& s, const Inner& empty, Keep keep) {
  Inner all = empty;
  for (const auto& u : s) all = unite(all, u);
  const auto points = members_of(all);
  if (points.size() > kCandidateUnionBound)
    throw CapacityError("cnf: union of " + std::to_string(points.size()) + " points above bound " +
                        std::to_string(kCandidateUnionBound));
  // Each U as a bitmask over the positions of `points`.
  std::vector<std::uint64_t> masks;
  for (const auto& u : s) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (intersection_size(subset_of(empty, points, std::uint64_t{1} << i), u) == 1) m |= std::uint64_t{1} << i;
    masks.push_back(m);
  }
  std::vector<Inner> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points.size()); ++mask) {
    bool ok = true;
    for (auto m : masks)
      if (!keep(static_cast<std::size_t>(std::popcount(mask & m)))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(subset_of(empty, points, mask));
  }
  return FlatSet<Inner>(std::move(out));
}

}  // namespace detail

/// {V ⊆ ∪S | ∀U ∈ S, |V ∩ U| = 1} for S a collection of subsets of {0..carrier-1}.
inline Family cnf_exact(std::size_t carrier, const Family& s) {
  return detail::cnf_filter(s, StateSet(carrier), [](std::size_t k) { return k == 1; });
}

/// {V ⊆ ∪S | ∀U ∈ S, V ∩ U ≠ ∅}.
inline Family cnf_atleast(std::size_t carrier, const Family& s) {
  return detail::cnf_filter(s, StateSet(carrier), [](std::size_t k) { return k >= 1; });
}

/// The same comprehensions one level up, where the points are themselves sets.
template <class T>
FlatSet<FlatSet<T>> cnf_exact(const FlatSet<FlatSet<T>>& s) {
  return detail::cnf_filter(s, FlatSet<T>{}, [](std::size_t k) { return k == 1; });
}

template <class T>
FlatSet<FlatSet<T>> cnf_atleast(const FlatSet<FlatSet<T>>& s) {
  return detail::cnf_filter(s, FlatSet<T>{}, [](std::size_t k) { return k >= 1; });
}

}  // namespace altdet::monad
