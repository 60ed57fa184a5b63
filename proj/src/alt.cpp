#include "altdet/alt.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>

#include "altdet/updown.hpp"

namespace altdet::monad {

AltElement::AltElement(std::size_t carrier, std::vector<StateSet> family) : carrier_{carrier} {
  const StateSet full = StateSet::full(carrier);
  for (auto& s : family) {
    if (!s.is_subset_of(full))
      throw DomainError("fork " + s.to_string() + " outside carrier of size " + std::to_string(carrier));
    if (s.carrier_size() != carrier) s = s.with_carrier(carrier);
  }
  forks_ = order::minimal_elements(std::move(family));
}

std::vector<StateSet> AltElement::expanded() const { return order::expand_antichain(carrier_, forks_); }

AltElement alt_unit(std::size_t carrier, std::size_t x) {
  if (x >= carrier) throw DomainError("alt_unit: element outside carrier");
  return AltElement(carrier, {StateSet(carrier, {x})});
}

AltElement alt_map(const FiniteFunction& f, const AltElement& e) {
  if (f.domain_size != e.carrier_size())
    throw DomainError("alt_map: function domain " + std::to_string(f.domain_size) +
                      " does not match carrier " + std::to_string(e.carrier_size()));
  std::vector<StateSet> images;
  images.reserve(e.forks().size());
  for (const auto& fork : e.forks()) images.push_back(f.image(fork));
  return AltElement(f.codomain_size, std::move(images));
}

AltElement alt_mult(std::size_t carrier, const AltElement& e, std::span<const AltElement> inner) {
  if (e.carrier_size() != inner.size())
    throw DomainError("alt_mult: outer element over " + std::to_string(e.carrier_size()) +
                      " points, " + std::to_string(inner.size()) + " inner elements");
  for (const auto& a : inner)
    if (a.carrier_size() != carrier) throw DomainError("alt_mult: inner element over the wrong carrier");
  std::vector<StateSet> out;
  for (const auto& fork : e.forks()) {
    Antichain meet = AltElement::top(carrier).forks();
    fork.for_each([&](std::size_t t) { meet = order::family_meet(meet, inner[t].forks()); });
    out.insert(out.end(), meet.begin(), meet.end());
  }
  return AltElement(carrier, std::move(out));
}

AltElement alt_mult(std::size_t carrier, const AltElement& e) {
  const auto& all = enumerate_alt(carrier);
  return alt_mult(carrier, e, all);
}

std::optional<std::size_t> alt_count(std::size_t n) {
  static constexpr std::array<std::size_t, 7> dedekind{2, 3, 6, 20, 168, 7581, 7828354};
  if (n < dedekind.size()) return dedekind[n];
  return std::nullopt;
}

namespace {

constexpr std::size_t kAltEnumerationBound = 5;

// Up-closed families of subsets of an n-set as bitmasks over the 2^n subsets (n <= 5).
// A family splits into the part avoiding point n-1 and the part containing it; it is
// up-closed iff both halves are and the first is contained in the second.
std::vector<std::uint64_t> up_family_masks(std::size_t n) {
  if (n == 0) return {0, 1};
  const auto half = up_family_masks(n - 1);
  const std::size_t shift = std::size_t{1} << (n - 1);
  std::vector<std::uint64_t> out;
  for (auto a : half)
    for (auto b : half)
      if ((a & ~b) == 0) out.push_back(a | (b << shift));
  return out;
}

std::vector<AltElement> build_alt(std::size_t n) {
  std::vector<AltElement> out;
  for (auto mask : up_family_masks(n)) {
    std::vector<StateSet> family;
    for (std::size_t p = 0; p < (std::size_t{1} << n); ++p)
      if ((mask >> p) & 1U) family.push_back(StateSet::from_mask(n, p));
    out.emplace_back(n, std::move(family));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<AltElement>& enumerate_alt(std::size_t n) {
  if (n > kAltEnumerationBound)
    throw CapacityError("Alt(X) has " + std::to_string(*alt_count(std::min<std::size_t>(n, 6))) +
                        "+ elements for |X| = " + std::to_string(n) + "; enumeration stops at |X| = " +
                        std::to_string(kAltEnumerationBound));
  static std::array<std::once_flag, kAltEnumerationBound + 1> once;
  static std::array<std::vector<AltElement>, kAltEnumerationBound + 1> cache;
  std::call_once(once[n], [n] { cache[n] = build_alt(n); });
  return cache[n];
}

std::size_t alt_index(const AltElement& e) {
  const auto& all = enumerate_alt(e.carrier_size());
  auto it = std::lower_bound(all.begin(), all.end(), e);
  if (it == all.end() || !(*it == e)) throw DomainError("alt_index: element not in Alt(X)");
  return static_cast<std::size_t>(it - all.begin());
}

AltElement composite_mult_via_pipeline(std::size_t carrier, const AltElement& e) {
  if (carrier > 2)
    throw CapacityError("composite_mult_via_pipeline: carrier " + std::to_string(carrier) +
                        " above 2; the Up(Dn(Dn P(X))) layer does not fit the bitset bound");
  const auto& alts = enumerate_alt(carrier);
  if (e.carrier_size() != alts.size())
    throw DomainError("composite_mult_via_pipeline: element is not over Alt(X)");

  // Alt(X) = Up(Dn(Do X)) with P(X) = Dn(Do X) ordered by inclusion.
  const Layer l1 = Layer::down(FinitePoset::discrete(carrier));
  const Layer l2 = Layer::up(l1.order());

  std::vector<std::size_t> alt_to_l2(alts.size());
  for (std::size_t i = 0; i < alts.size(); ++i) {
    StateSet members(l1.size());
    for (const auto& t : alts[i].expanded()) members.insert(l1.index_of(t));
    alt_to_l2[i] = l2.index_of(members);
  }

  // Up(Dn ε): each fork, retyped into Do(U(Alt X)), is closed downwards in Alt(X).
  const Layer l3 = Layer::down(l2.order());
  StateSet stage1(l3.size());
  for (const auto& fork : e.expanded()) {
    StateSet in_l2(l2.size());
    fork.for_each([&](std::size_t i) { in_l2.insert(alt_to_l2[i]); });
    stage1.insert(l3.index_of(order::down_closure(l2.order(), in_l2)));
  }
  stage1 = order::up_closure(l3.order(), stage1);

  // Up(λ_{P X}): Up(Dn(Up(P X))) -> Up(Up(Dn(P X))).
  const Layer ld = Layer::down(l1.order());
  const Layer lud = Layer::up(ld.order());
  StateSet stage2(lud.size());
  stage1.for_each([&](std::size_t x) { stage2.insert(lud.index_of(dist_dn_up(l2, ld, l3[x]))); });
  stage2 = order::up_closure(lud.order(), stage2);

  // μ^Up at Dn(P X).
  const StateSet stage3 = flatten(lud, stage2);

  // Up(μ^Dn): Up(Dn(Dn P X)) -> Up(Dn P X).
  const MonotoneMap dn_union = mult_map(ld, l1);
  const StateSet stage4 = order::up_closure(l1.order(), dn_union.image(stage3));

  std::vector<StateSet> family;
  stage4.for_each([&](std::size_t i) { family.push_back(l1[i]); });
  return AltElement(carrier, std::move(family));
}

AltElement random_alt(std::size_t carrier, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> fork_count(0, 4);
  std::uniform_int_distribution<std::size_t> fork_size(0, carrier);
  std::vector<std::size_t> points(carrier);
  for (std::size_t i = 0; i < carrier; ++i) points[i] = i;
  std::vector<StateSet> forks;
  const std::size_t k = fork_count(rng);
  for (std::size_t f = 0; f < k; ++f) {
    std::shuffle(points.begin(), points.end(), rng);
    const std::size_t size = fork_size(rng);
    forks.emplace_back(carrier, std::vector<std::size_t>(points.begin(), points.begin() + size));
  }
  return AltElement(carrier, std::move(forks));
}

}  // namespace altdet::monad
