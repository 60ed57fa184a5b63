#include "altdet/antichain.hpp"

#include <algorithm>

#include "altdet/poset.hpp"

namespace altdet::order {

std::size_t Antichain::hash() const noexcept {
  std::size_t h = sets_.size();
  for (const auto& s : sets_) h ^= s.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Antichain::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ',';
    out += sets_[i].to_string();
  }
  return out + "}";
}

Antichain minimal_elements(std::vector<StateSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  Antichain out;
  // Sorted by cardinality first, so every subset of a candidate precedes it.
  for (auto& s : family) {
    bool dominated = false;
    for (const auto& kept : out.sets_)
      if (kept.is_subset_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.sets_.push_back(std::move(s));
  }
  return out;
}

std::vector<StateSet> expand_antichain(std::size_t carrier, const Antichain& a) {
  if (carrier > kEnumerationBound)
    throw CapacityError("expand_antichain: carrier " + std::to_string(carrier) +
                        " above bound " + std::to_string(kEnumerationBound));
  std::vector<StateSet> out;
  for (const auto& fork : a) {
    if (!fork.is_subset_of(StateSet::full(carrier)))
      throw DomainError("expand_antichain: fork " + fork.to_string() + " outside carrier");
    const std::uint64_t base = fork.word(0);
    const std::uint64_t free = StateSet::full(carrier).word(0) & ~base;
    // Enumerate every submask of the free positions.
    std::uint64_t sub = free;
    while (true) {
      out.push_back(StateSet::from_mask(carrier, base | sub));
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Antichain family_join(const Antichain& a, const Antichain& b) {
  std::vector<StateSet> all(a.sets().begin(), a.sets().end());
  all.insert(all.end(), b.sets().begin(), b.sets().end());
  return minimal_elements(std::move(all));
}

Antichain family_meet(const Antichain& a, const Antichain& b) {
  std::vector<StateSet> all;
  all.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) all.push_back(x | y);
  return minimal_elements(std::move(all));
}

}  // namespace altdet::order
