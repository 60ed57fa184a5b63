#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "altdet/errors.hpp"

namespace altdet {

/// Subset of the carrier {0, ..., carrier_size()-1}, stored as a fixed-width bitset.
///
/// Equality is extensional: two sets with the same members compare equal even if
/// they were built over different carriers. The total order is (cardinality, numeric
/// value of the bitset), which is the canonical order used for antichains.
class StateSet {
 public:
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kMaxCarrier = kWords * 64;

  StateSet() = default;

  explicit StateSet(std::size_t carrier) : carrier_{check_carrier(carrier)} {}

  StateSet(std::size_t carrier, std::initializer_list<std::size_t> members) : StateSet(carrier) {
    for (auto m : members) insert(m);
  }

  StateSet(std::size_t carrier, const std::vector<std::size_t>& members) : StateSet(carrier) {
    for (auto m : members) insert(m);
  }

  static StateSet full(std::size_t carrier) {
    StateSet s(carrier);
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (carrier >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (carrier > lo) {
        s.words_[w] = (std::uint64_t{1} << (carrier - lo)) - 1;
      }
    }
    return s;
  }

  /// Builds the set whose members are the one-bits of `mask` (carrier must be <= 64).
  static StateSet from_mask(std::size_t carrier, std::uint64_t mask) {
    if (carrier > 64) throw CapacityError("from_mask: carrier above 64");
    StateSet s(carrier);
    if (carrier < 64) mask &= (std::uint64_t{1} << carrier) - 1;
    s.words_[0] = mask;
    return s;
  }

  std::size_t carrier_size() const noexcept { return carrier_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(std::size_t i) const noexcept {
    return i < carrier_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }

  void insert(std::size_t i) {
    if (i >= carrier_)
      throw DomainError("state index " + std::to_string(i) + " outside carrier of size " +
                        std::to_string(carrier_));
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(std::size_t i) noexcept {
    if (i < carrier_) words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  StateSet& operator|=(const StateSet& o) {
    same_carrier(o);
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }

  StateSet& operator&=(const StateSet& o) {
    same_carrier(o);
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }

  /// Set difference.
  StateSet& operator-=(const StateSet& o) {
    same_carrier(o);
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  /// Complement within the carrier.
  StateSet complement() const { return full(carrier_) - *this; }

  bool is_subset_of(const StateSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const StateSet& o) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }

  /// Smallest member; carrier_size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return carrier_;
  }

  std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Same members over a different carrier; throws if a member does not fit.
  StateSet with_carrier(std::size_t carrier) const {
    StateSet s(carrier);
    for_each([&](std::size_t i) { s.insert(i); });
    return s;
  }

  friend bool operator==(const StateSet& a, const StateSet& b) noexcept {
    return a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) noexcept {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t w = kWords; w-- > 0;)
      if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](std::size_t i) {
      if (!first_member) out += ',';
      out += std::to_string(i);
      first_member = false;
    });
    return out + "}";
  }

 private:
  static std::size_t check_carrier(std::size_t carrier) {
    if (carrier > kMaxCarrier)
      throw CapacityError("carrier of size " + std::to_string(carrier) + " exceeds the " +
                          std::to_string(kMaxCarrier) + "-element bitset bound");
    return carrier;
  }

  void same_carrier(const StateSet& o) const {
    if (o.carrier_ != carrier_)
      throw DomainError("carrier-size mismatch: " + std::to_string(carrier_) + " vs " +
                        std::to_string(o.carrier_));
  }

  std::array<std::uint64_t, kWords> words_{};
  std::size_t carrier_ = 0;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

/// Every subset of {0..carrier-1}, in increasing numeric order (carrier <= 20).
std::vector<StateSet> all_subsets(std::size_t carrier);

}  // namespace altdet
