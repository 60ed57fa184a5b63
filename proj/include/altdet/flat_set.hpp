#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "altdet/state_set.hpp"

namespace altdet {

/// Finite set of ordered values, stored as a sorted duplicate-free vector.
/// Ordered by (size, lexicographic), so nested sets have a canonical order too.
template <class T>
class FlatSet {
 public:
  using value_type = T;

  FlatSet() = default;
  FlatSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit FlatSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

  void insert(T v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || !(*it == v)) items_.insert(it, std::move(v));
  }

  bool contains(const T& v) const { return std::binary_search(items_.begin(), items_.end(), v); }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  const std::vector<T>& items() const noexcept { return items_; }
  const T& operator[](std::size_t i) const { return items_.at(i); }

  friend bool operator==(const FlatSet&, const FlatSet&) = default;
  friend auto operator<=>(const FlatSet& a, const FlatSet& b) {
    if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                  b.items_.begin(), b.items_.end());
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

/// A set of subsets of one carrier: an element of P(P(X)).
using Family = FlatSet<StateSet>;

template <class T>
FlatSet<T> unite(const FlatSet<T>& a, const FlatSet<T>& b) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return FlatSet<T>(std::move(out));
}

template <class T>
std::size_t intersection_size(const FlatSet<T>& a, const FlatSet<T>& b) {
  std::size_t n = 0;
  for (const auto& v : a)
    if (b.contains(v)) ++n;
  return n;
}

inline StateSet unite(const StateSet& a, const StateSet& b) { return a | b; }
inline std::size_t intersection_size(const StateSet& a, const StateSet& b) { return (a & b).count(); }

inline std::string to_string(const StateSet& s) { return s.to_string(); }

template <class T>
std::string to_string(const FlatSet<T>& s) {
  using altdet::to_string;
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ',';
    if constexpr (std::is_arithmetic_v<T>) {
      out += std::to_string(v);
    } else {
      out += to_string(v);
    }
    first = false;
  }
  return out + "}";
}

}  // namespace altdet
