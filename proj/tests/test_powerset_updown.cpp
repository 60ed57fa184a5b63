#include "test_support.hpp"

#include <algorithm>

#include "altdet/errors.hpp"
#include "altdet/powerset.hpp"
#include "altdet/updown.hpp"

using namespace altdet;
using namespace altdet::monad;
using order::FinitePoset;
using order::MonotoneMap;

namespace {

std::vector<FinitePoset> posets_up_to(std::size_t n) {
  std::vector<FinitePoset> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto& p : order::all_posets(k)) out.push_back(std::move(p));
  return out;
}

std::vector<StateSet> sorted(std::vector<StateSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<StateSet> members(const Layer& layer, const StateSet& s) {
  std::vector<StateSet> out;
  s.for_each([&](std::size_t i) { out.push_back(layer[i]); });
  return out;
}

// {T ⊆ X | T down-closed, T meets every member of s}, filtered from all subsets.
std::vector<StateSet> dist_oracle(const FinitePoset& p, const std::vector<StateSet>& s) {
  std::vector<StateSet> out;
  for (const auto& t : all_subsets(p.size())) {
    bool down = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (t.contains(y) && p.leq(x, y) && !t.contains(x)) down = false;
    if (!down) continue;
    if (std::all_of(s.begin(), s.end(), [&](const StateSet& u) { return u.intersects(t); })) out.push_back(t);
  }
  return sorted(out);
}

}  // namespace

TEST_CASE("powerset functor and monad examples") {
  const auto id = order::FiniteFunction::identity(3);
  const StateSet s(3, {0, 2});
  CHECK(pow_map(id, s) == s);
  CHECK(pow_map(order::FiniteFunction(2, {0, 0}), StateSet::full(2)) == StateSet(2, {0}));
  CHECK(pow_map(order::FiniteFunction(2, {1, 0}), StateSet(2, {0})) == StateSet(2, {1}));
  CHECK(pow_unit(3, 2) == StateSet(3, {2}));
  CHECK_THROWS_AS(pow_unit(3, 3), DomainError);
  const std::vector<StateSet> two{StateSet(2, {0}), StateSet(2, {1})};
  CHECK(pow_mult(2, two) == StateSet::full(2));
  CHECK(pow_mult(2, std::vector<StateSet>{}).empty());
}

TEST_CASE("Up monad examples") {
  const auto d2 = FinitePoset::discrete(2);
  const auto c2 = FinitePoset::chain(2);
  CHECK(up_unit(d2, 1) == StateSet(2, {1}));
  CHECK(up_unit(c2, 0) == StateSet::full(2));
  CHECK(up_mult(c2, {StateSet(2)}).empty());
  const MonotoneMap collapse(c2, c2, {1, 1});
  CHECK(up_map(collapse, StateSet::full(2)) == StateSet(2, {1}));
  CHECK_THROWS_AS(up_map(collapse, StateSet(2, {0})), DomainError);
}

TEST_CASE("Dn monad examples") {
  const auto c2 = FinitePoset::chain(2);
  CHECK(dn_unit(FinitePoset::discrete(2), 0) == StateSet(2, {0}));
  CHECK(dn_unit(c2, 1) == StateSet::full(2));
  CHECK(dn_mult(c2, {StateSet(2), StateSet(2, {0}), StateSet::full(2)}) == StateSet::full(2));
  CHECK_THROWS_AS(dn_map(MonotoneMap(c2, c2, {0, 1}), StateSet(2, {1})), DomainError);
}

TEST_CASE("unit and map agree with the closure definitions on all small posets") {
  for (const auto& p : posets_up_to(3)) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK(up_unit(p, x) == order::up_closure(p, StateSet(p.size(), {x})));
      CHECK(dn_unit(p, x) == order::down_closure(p, StateSet(p.size(), {x})));
    }
    for (const auto& q : posets_up_to(2))
      for (const auto& f : order::all_monotone_maps(p, q)) {
        for (const auto& u : order::enumerate_up_sets(p)) CHECK(up_map(f, u) == order::up_closure(q, f.image(u)));
        for (const auto& d : order::enumerate_down_sets(p)) CHECK(dn_map(f, d) == order::down_closure(q, f.image(d)));
      }
  }
}

TEST_CASE("the distributive law examples") {
  const auto d2 = FinitePoset::discrete(2);
  CHECK(sorted(dist_dn_up(d2, {})) == sorted(order::enumerate_down_sets(d2)));
  CHECK(dist_dn_up(d2, {StateSet(2), StateSet(2, {0}), StateSet(2, {1}), StateSet::full(2)}).empty());
  const auto r = dist_dn_up(d2, {StateSet(2, {0}), StateSet(2, {1}), StateSet::full(2)});
  CHECK(r == std::vector<StateSet>{StateSet::full(2)});
}

TEST_CASE("the distributive law equals its set comprehension on every Dn(Up X) element") {
  for (const auto& p : posets_up_to(3)) {
    const Layer ux = Layer::up(p);
    const Layer dx = Layer::down(p);
    const Layer dux = Layer::down(ux.order());
    for (const auto& s : dux.elements()) {
      const auto family = members(ux, s);
      const auto got = sorted(dist_dn_up(p, family));
      CHECK(got == dist_oracle(p, family));
      // Output is ⊆-upward closed among down-sets.
      for (const auto& t : got)
        for (const auto& t2 : dx.elements())
          if (t.is_subset_of(t2)) CHECK(std::binary_search(got.begin(), got.end(), t2));
      CHECK(sorted(members(dx, dist_dn_up(ux, dx, s))) == got);
    }
  }
}

TEST_CASE("the distributive law rejects inputs that are not closed") {
  const auto c2 = FinitePoset::chain(2);
  // {0} is not an up-set of the chain.
  CHECK_THROWS_AS(dist_dn_up(c2, {StateSet(2, {0})}), DomainError);
  // {{1}} misses the superset {0,1}, so it is not ⊆-upward closed.
  CHECK_THROWS_AS(dist_dn_up(c2, {StateSet(2, {1})}), DomainError);
  CHECK_NOTHROW(dist_dn_up(c2, {StateSet(2, {1}), StateSet::full(2)}));
}

TEST_CASE("down-sets of a discrete poset are all subsets") {
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(sorted(order::enumerate_down_sets(FinitePoset::discrete(n))) == sorted(all_subsets(n)));
}

TEST_CASE("the discrete adjunction has identity unit and counit") {
  for (std::size_t n = 0; n <= 4; ++n) CHECK(discrete_adjunction_unit(n) == order::FiniteFunction::identity(n));
  for (const auto& p : posets_up_to(3)) {
    const auto e = discrete_adjunction_counit(p);
    CHECK(e.domain().is_discrete());
    CHECK(e.function() == order::FiniteFunction::identity(p.size()));
  }
}

TEST_CASE("layers enumerate closed sets and order them by the right inclusion") {
  const auto c2 = FinitePoset::chain(2);
  const Layer u = Layer::up(c2);
  const Layer d = Layer::down(c2);
  CHECK(u.size() == 3);
  CHECK(d.size() == 3);
  const auto i_full = u.index_of(StateSet::full(2));
  const auto i_top = u.index_of(StateSet(2, {1}));
  // Reversed inclusion on up-sets, inclusion on down-sets.
  CHECK(u.order().leq(i_full, i_top));
  CHECK(d.order().leq(d.index_of(StateSet(2, {0})), d.index_of(StateSet::full(2))));
  CHECK_FALSE(u.find(StateSet(2, {0})).has_value());
  CHECK_THROWS_AS(u.index_of(StateSet(2, {0})), DomainError);
}
