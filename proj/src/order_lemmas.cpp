#include "altdet/order_lemmas.hpp"

#include <string>
#include <utility>
#include <vector>

#include "altdet/poset.hpp"

namespace altdet::order {

namespace {

std::vector<FinitePoset> posets_up_to(std::size_t max_n) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& p : all_posets(n)) out.push_back(std::move(p));
  return out;
}

std::string show_family(const std::vector<StateSet>& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i].to_string();
  }
  return out + "}";
}

// Every subfamily of `members` (at most 8 members here).
std::vector<std::vector<StateSet>> subfamilies(const std::vector<StateSet>& members) {
  std::vector<std::vector<StateSet>> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
    std::vector<StateSet> f;
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((m >> i) & 1U) f.push_back(members[i]);
    out.push_back(std::move(f));
  }
  return out;
}

struct FamilyCase {
  std::size_t poset;
  std::vector<StateSet> family;
  StateSet t;
};

}  // namespace

LawReport check_closure_union_lemma(std::size_t max_n, const HarnessOptions& opts) {
  const auto posets = posets_up_to(max_n);
  std::vector<FamilyCase> cases;
  for (std::size_t p = 0; p < posets.size(); ++p)
    for (auto& f : subfamilies(enumerate_down_sets(posets[p])))
      cases.push_back({p, std::move(f), StateSet(posets[p].size())});

  const auto sides = [&](const FamilyCase& c) {
    const std::size_t n = posets[c.poset].size();
    StateSet plain(n), closed(n);
    for (const auto& s : c.family) plain |= s;
    for (const auto& t : enumerate_down_sets(posets[c.poset]))
      for (const auto& s : c.family)
        if (t.is_subset_of(s)) {
          closed |= t;
          break;
        }
    return std::make_pair(closed, plain);
  };
  return run_diagram(
      "order.closure-union", CheckMode::exhaustive, opts, cases.size(),
      [&](std::size_t i) {
        auto [l, r] = sides(cases[i]);
        return l == r;
      },
      [&](std::size_t i) {
        auto [l, r] = sides(cases[i]);
        return Counterexample{posets[cases[i].poset].to_string() + ":" + show_family(cases[i].family), l.to_string(),
                              r.to_string()};
      });
}

std::pair<LawReport, LawReport> check_closure_image_lemma(std::size_t max_n, const HarnessOptions& opts) {
  const auto posets = posets_up_to(max_n);
  struct Case {
    std::size_t map;
    StateSet p;
  };
  std::vector<MonotoneMap> maps;
  std::vector<Case> cases;
  for (const auto& a : posets)
    for (const auto& b : posets)
      for (auto& f : all_monotone_maps(a, b)) {
        for (const auto& p : all_subsets(a.size())) cases.push_back({maps.size(), p});
        maps.push_back(std::move(f));
      }

  const auto run = [&](bool up) {
    const auto close = [up](const FinitePoset& q, const StateSet& s) { return up ? up_closure(q, s) : down_closure(q, s); };
    const auto lhs = [&](const Case& c) {
      const auto& f = maps[c.map];
      return close(f.codomain(), f.image(close(f.domain(), c.p)));
    };
    const auto rhs = [&](const Case& c) {
      const auto& f = maps[c.map];
      return close(f.codomain(), f.image(c.p));
    };
    return run_diagram(
        up ? "order.closure-image-up" : "order.closure-image-down", CheckMode::exhaustive, opts, cases.size(),
        [&](std::size_t i) { return lhs(cases[i]) == rhs(cases[i]); },
        [&](std::size_t i) {
          const auto& f = maps[cases[i].map];
          return Counterexample{"P=" + f.domain().to_string() + ",Q=" + f.codomain().to_string() +
                                    ",f=" + f.function().to_string() + ",p=" + cases[i].p.to_string(),
                                lhs(cases[i]).to_string(), rhs(cases[i]).to_string()};
        });
  };
  return {run(true), run(false)};
}

LawReport check_closure_intersection_lemma(std::size_t max_n, const HarnessOptions& opts) {
  const auto posets = posets_up_to(max_n);
  std::vector<FamilyCase> cases;
  for (std::size_t p = 0; p < posets.size(); ++p) {
    const auto downs = enumerate_down_sets(posets[p]);
    for (const auto& f : subfamilies(enumerate_up_sets(posets[p])))
      for (const auto& t : downs) cases.push_back({p, f, t});
  }
  const auto meets_all = [](const StateSet& t, const std::vector<StateSet>& family) {
    for (const auto& s : family)
      if (!t.intersects(s)) return false;
    return true;
  };
  const auto lhs = [&](const FamilyCase& c) {
    std::vector<StateSet> closed;
    for (const auto& u : enumerate_up_sets(posets[c.poset]))
      for (const auto& s : c.family)
        if (s.is_subset_of(u)) {
          closed.push_back(u);
          break;
        }
    return meets_all(c.t, closed);
  };
  const auto rhs = [&](const FamilyCase& c) { return meets_all(c.t, c.family); };
  return run_diagram(
      "order.closure-intersection", CheckMode::exhaustive, opts, cases.size(),
      [&](std::size_t i) { return lhs(cases[i]) == rhs(cases[i]); },
      [&](std::size_t i) {
        const auto& c = cases[i];
        return Counterexample{posets[c.poset].to_string() + ":S=" + show_family(c.family) + ",t=" + c.t.to_string(),
                              lhs(c) ? "1" : "0", rhs(c) ? "1" : "0"};
      });
}

}  // namespace altdet::order
