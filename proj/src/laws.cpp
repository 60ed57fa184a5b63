#include "altdet/laws.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "altdet/candidates.hpp"

namespace altdet::laws {

using monad::Layer;
using order::MonotoneMap;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::string show_set(const StateSet& s) { return s.to_string(); }

// Closed subsets of `order` in direction `d`, enumerated when the order is small enough;
// otherwise closures of random sets of up to three points.
Inputs<StateSet> closed_sets(const FinitePoset& order, Direction d, const HarnessOptions& opts) {
  std::optional<std::vector<StateSet>> all;
  if (order.size() <= order::kEnumerationBound)
    all = d == Direction::up ? order::enumerate_up_sets(order) : order::enumerate_down_sets(order);
  return enumerated_or_sampled<StateSet>(opts, std::move(all), [order, d](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> points(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, order.size() - 1);
    StateSet s(order.size());
    if (order.size() > 0)
      for (std::size_t i = points(rng); i > 0; --i) s.insert(pick(rng));
    return d == Direction::up ? order::up_closure(order, s) : order::down_closure(order, s);
  });
}

Inputs<std::size_t> indices(std::size_t n, const HarnessOptions& opts) {
  return enumerated_or_sampled<std::size_t>(opts, iota(n), [](std::mt19937_64&) { return std::size_t{0}; });
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  return MonotoneMap(f.domain(), g.codomain(), g.function().after(f.function()).table);
}

StateSet tmap(Direction d, const MonotoneMap& f, const StateSet& s) {
  return d == Direction::up ? monad::up_map(f, s) : monad::dn_map(f, s);
}

}  // namespace

std::vector<LawReport> check_poset_monad_laws(Direction d, const FinitePoset& poset, const std::string& label,
                                              const HarnessOptions& opts) {
  const std::string prefix = std::string(monad::to_string(d)) + "[" + label + "].";
  const Layer l1 = Layer::of(d, poset);
  const Layer l2 = Layer::of(d, l1.order());
  const MonotoneMap eta1 = monad::unit_map(l1);
  const MonotoneMap eta2 = monad::unit_map(l2);
  const MonotoneMap mu = monad::mult_map(l2, l1);
  const MonotoneMap t_eta1 = monad::lift(l1, l2, eta1);

  const auto show_index = [&](std::size_t i) { return l1[i].to_string(); };
  const auto same = [](std::size_t i) { return i; };
  std::vector<LawReport> reports;
  const auto units = indices(l1.size(), opts);
  reports.push_back(check_paths(
      prefix + "unit-left", units, opts, [&](std::size_t i) { return mu(eta2(i)); }, same, show_index,
      show_index));
  reports.push_back(check_paths(
      prefix + "unit-right", units, opts, [&](std::size_t i) { return mu(t_eta1(i)); }, same, show_index,
      show_index));
  reports.push_back(check_paths(
      prefix + "assoc", closed_sets(l2.order(), d, opts), opts,
      [&](const StateSet& s) { return monad::flatten(l1, l2.close(mu.image(s))); },
      [&](const StateSet& s) { return monad::flatten(l1, monad::flatten(l2, s)); }, show_set, show_set));
  return reports;
}

std::vector<LawReport> check_poset_functor_laws(Direction d, std::size_t max_n, const HarnessOptions& opts) {
  const std::string prefix = std::string(monad::to_string(d)) + ".functor-";
  std::vector<FinitePoset> posets;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& p : order::all_posets(n)) posets.push_back(std::move(p));

  struct IdCase {
    std::size_t poset;
    StateSet s;
  };
  std::vector<IdCase> id_cases;
  for (std::size_t p = 0; p < posets.size(); ++p) {
    const auto& sets = d == Direction::up ? order::enumerate_up_sets(posets[p]) : order::enumerate_down_sets(posets[p]);
    for (const auto& s : sets) id_cases.push_back({p, s});
  }

  // Composition over posets of size <= 2: with size 3 the triples of maps run to the millions.
  struct CompCase {
    std::shared_ptr<const MonotoneMap> f, g;
    StateSet s;
  };
  std::vector<CompCase> comp_cases;
  std::vector<std::size_t> small;
  for (std::size_t p = 0; p < posets.size(); ++p)
    if (posets[p].size() <= 2) small.push_back(p);
  for (auto a : small) {
    const auto& sets = d == Direction::up ? order::enumerate_up_sets(posets[a]) : order::enumerate_down_sets(posets[a]);
    for (auto b : small)
      for (const auto& f : order::all_monotone_maps(posets[a], posets[b])) {
        auto fp = std::make_shared<const MonotoneMap>(f);
        for (auto c : small)
          for (const auto& g : order::all_monotone_maps(posets[b], posets[c])) {
            auto gp = std::make_shared<const MonotoneMap>(g);
            for (const auto& s : sets) comp_cases.push_back({fp, gp, s});
          }
      }
  }

  std::vector<LawReport> reports;
  reports.push_back(check_paths(
      prefix + "identity", all_of(id_cases), opts,
      [&](const IdCase& c) {
        const auto& p = posets[c.poset];
        return tmap(d, MonotoneMap(p, p, order::FiniteFunction::identity(p.size()).table), c.s);
      },
      [](const IdCase& c) { return c.s; },
      [&](const IdCase& c) { return posets[c.poset].to_string() + ":" + c.s.to_string(); }, show_set));
  reports.push_back(check_paths(
      prefix + "composition", all_of(comp_cases), opts,
      [d](const CompCase& c) { return tmap(d, compose(*c.g, *c.f), c.s); },
      [d](const CompCase& c) { return tmap(d, *c.g, tmap(d, *c.f, c.s)); },
      [](const CompCase& c) {
        return "f=" + c.f->function().to_string() + ",g=" + c.g->function().to_string() + ",s=" + c.s.to_string();
      },
      show_set));
  return reports;
}

std::vector<LawReport> check_dist_law(const FinitePoset& poset, const std::string& label,
                                      const HarnessOptions& opts) {
  const std::string prefix = "dist[" + label + "].";
  const Layer ux = Layer::up(poset);
  const Layer dx = Layer::down(poset);
  const Layer dux = Layer::down(ux.order());
  const Layer udx = Layer::up(dx.order());
  const MonotoneMap lambda = monad::dist_map(ux, dx, dux, udx);

  std::vector<LawReport> reports;

  // λ ∘ η^Dn_{Up X} = Up(η^Dn_X)
  {
    const MonotoneMap eta_dn_ux = monad::unit_map(dux);
    const MonotoneMap up_eta_dn = monad::lift(ux, udx, monad::unit_map(dx));
    reports.push_back(check_paths(
        prefix + "unit-dn-triangle", indices(ux.size(), opts), opts,
        [&](std::size_t i) { return lambda(eta_dn_ux(i)); }, [&](std::size_t i) { return up_eta_dn(i); },
        [&](std::size_t i) { return ux[i].to_string(); }, [&](std::size_t j) { return udx[j].to_string(); }));
  }

  // λ ∘ Dn(η^Up_X) = η^Up_{Dn X}
  {
    const MonotoneMap dn_eta_up = monad::lift(dx, dux, monad::unit_map(ux));
    const MonotoneMap eta_up_dx = monad::unit_map(udx);
    reports.push_back(check_paths(
        prefix + "unit-up-triangle", indices(dx.size(), opts), opts,
        [&](std::size_t i) { return lambda(dn_eta_up(i)); }, [&](std::size_t i) { return eta_up_dx(i); },
        [&](std::size_t i) { return dx[i].to_string(); }, [&](std::size_t j) { return udx[j].to_string(); }));
  }

  // λ ∘ μ^Dn_{Up X} = Up(μ^Dn_X) ∘ λ_{Dn X} ∘ Dn(λ_X) on Dn(Dn(Up X))
  {
    const Layer ddx = Layer::down(dx.order());
    const MonotoneMap mu_dn = monad::mult_map(ddx, dx);
    reports.push_back(check_paths(
        prefix + "mult-dn-rectangle", closed_sets(dux.order(), Direction::down, opts), opts,
        [&](const StateSet& s) { return udx[lambda(dux.index_of(monad::flatten(dux, s)))]; },
        [&](const StateSet& s) {
          const StateSet dn_lambda = order::down_closure(udx.order(), lambda.image(s));
          const StateSet swapped = monad::dist_dn_up(udx, ddx, dn_lambda);
          return order::up_closure(dx.order(), mu_dn.image(swapped));
        },
        show_set, show_set));
  }

  // λ ∘ Dn(μ^Up_X) = μ^Up_{Dn X} ∘ Up(λ_X) ∘ λ_{Up X} on Dn(Up(Up X))
  {
    const Layer uux = Layer::up(ux.order());
    const MonotoneMap mu_up = monad::mult_map(uux, ux);
    reports.push_back(check_paths(
        prefix + "mult-up-rectangle", closed_sets(uux.order(), Direction::down, opts), opts,
        [&](const StateSet& s) {
          const StateSet dn_mu = order::down_closure(ux.order(), mu_up.image(s));
          return monad::dist_dn_up(ux, dx, dn_mu);
        },
        [&](const StateSet& s) {
          const StateSet swapped = monad::dist_dn_up(uux, dux, s);
          const StateSet up_lambda = order::up_closure(udx.order(), lambda.image(swapped));
          return monad::flatten(udx, up_lambda);
        },
        show_set, show_set));
  }
  return reports;
}

LawReport check_dist_naturality(std::size_t max_n, const HarnessOptions& opts) {
  struct Layers {
    FinitePoset p;
    Layer ux, dx, dux, udx;
    MonotoneMap lambda;
  };
  std::vector<std::shared_ptr<const Layers>> all;
  for (std::size_t n = 0; n <= max_n; ++n)
    for (auto& p : order::all_posets(n)) {
      Layer ux = Layer::up(p), dx = Layer::down(p);
      Layer dux = Layer::down(ux.order()), udx = Layer::up(dx.order());
      MonotoneMap lambda = monad::dist_map(ux, dx, dux, udx);
      all.push_back(std::make_shared<const Layers>(Layers{p, ux, dx, dux, udx, lambda}));
    }

  // Both paths tabulated per map; a case is one (map, element of Dn(Up P)) pair.
  struct Tables {
    std::shared_ptr<const Layers> from, to;
    MonotoneMap f;
    std::vector<std::size_t> lhs, rhs;
  };
  std::vector<std::shared_ptr<const Tables>> tables;
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& f : order::all_monotone_maps(a->p, b->p)) {
        const MonotoneMap dn_up_f = monad::lift(a->dux, b->dux, monad::lift(a->ux, b->ux, f));
        const MonotoneMap up_dn_f = monad::lift(a->udx, b->udx, monad::lift(a->dx, b->dx, f));
        std::vector<std::size_t> lhs(a->dux.size()), rhs(a->dux.size());
        for (std::size_t i = 0; i < a->dux.size(); ++i) {
          lhs[i] = up_dn_f(a->lambda(i));
          rhs[i] = b->lambda(dn_up_f(i));
        }
        tables.push_back(std::make_shared<const Tables>(Tables{a, b, f, std::move(lhs), std::move(rhs)}));
        for (std::size_t i = 0; i < a->dux.size(); ++i) cases.emplace_back(tables.size() - 1, i);
      }

  return run_diagram(
      "dist.naturality", CheckMode::exhaustive, opts, cases.size(),
      [&](std::size_t k) {
        const auto& t = *tables[cases[k].first];
        return t.lhs[cases[k].second] == t.rhs[cases[k].second];
      },
      [&](std::size_t k) {
        const auto& t = *tables[cases[k].first];
        const std::size_t i = cases[k].second;
        return Counterexample{"P=" + t.from->p.to_string() + ",Q=" + t.to->p.to_string() +
                                  ",f=" + t.f.function().to_string() + ",S=" + t.from->dux[i].to_string(),
                              t.to->udx[t.lhs[i]].to_string(), t.to->udx[t.rhs[i]].to_string()};
      });
}

LawReport check_alt_unit_naturality(std::size_t max_n, const HarnessOptions& opts) {
  struct Case {
    FiniteFunction f;
    std::size_t x;
  };
  std::vector<Case> cases;
  for (std::size_t a = 1; a <= max_n; ++a)
    for (std::size_t b = 1; b <= max_n; ++b)
      for (const auto& f : order::all_functions(a, b))
        for (std::size_t x = 0; x < a; ++x) cases.push_back({f, x});
  return check_paths(
      "alt.unit-naturality", all_of(cases), opts,
      [](const Case& c) { return monad::alt_map(c.f, monad::alt_unit(c.f.domain_size, c.x)); },
      [](const Case& c) { return monad::alt_unit(c.f.codomain_size, c.f(c.x)); },
      [](const Case& c) { return "f=" + c.f.to_string() + ",x=" + std::to_string(c.x); },
      [](const monad::AltElement& e) { return e.to_string(); });
}

LawReport check_alt_pipeline(std::size_t n, const HarnessOptions& opts) {
  using monad::AltElement;
  const std::size_t k = *monad::alt_count(n);
  std::optional<std::vector<AltElement>> all;
  if (auto c = monad::alt_count(k); c && *c <= opts.exhaustive_cap) all = monad::enumerate_alt(k);
  return check_paths(
      "alt[" + std::to_string(n) + "].pipeline", enumerated_or_sampled<AltElement>(opts, std::move(all),
          [k](std::mt19937_64& rng) { return monad::random_alt(k, rng); }),
      opts, [n](const AltElement& e) { return monad::alt_mult(n, e); },
      [n](const AltElement& e) { return monad::composite_mult_via_pipeline(n, e); },
      [](const AltElement& e) { return e.to_string(); }, [](const AltElement& e) { return e.to_string(); });
}

LawReport check_dn_discrete_is_powerset(std::size_t max_n, const HarnessOptions& opts) {
  const auto show = [](const std::vector<StateSet>& v) { return show_list(v, show_set); };
  return check_paths(
      "dn-discrete.powerset", all_of(iota(max_n + 1)), opts,
      [](std::size_t n) { return order::enumerate_down_sets(FinitePoset::discrete(n)); },
      [](std::size_t n) { return all_subsets(n); }, [](std::size_t n) { return std::to_string(n); }, show);
}

namespace {

Family pp_map(const FiniteFunction& f, const Family& s) {
  std::vector<StateSet> out;
  for (const auto& u : s) out.push_back(f.image(u));
  return Family(std::move(out));
}

Family family_from_mask(const std::vector<StateSet>& subsets, std::uint64_t mask) {
  std::vector<StateSet> members;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if ((mask >> i) & 1U) members.push_back(subsets[i]);
  return Family(std::move(members));
}

std::string show_family(const Family& f) { return altdet::to_string(f); }

}  // namespace

LawReport check_cnf_naturality(bool exact, std::size_t min_n, std::size_t max_n, const HarnessOptions& opts) {
  struct Case {
    FiniteFunction f;
    Family s;
  };
  std::vector<Case> cases;
  for (std::size_t a = std::max<std::size_t>(min_n, 1); a <= max_n; ++a) {
    const auto subsets = all_subsets(a);
    for (std::size_t b = 1; b <= max_n; ++b)
      for (const auto& f : order::all_functions(a, b))
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets.size()); ++mask)
          cases.push_back({f, family_from_mask(subsets, mask)});
  }
  const auto cnf = [exact](std::size_t n, const Family& s) {
    return exact ? monad::cnf_exact(n, s) : monad::cnf_atleast(n, s);
  };
  return check_paths(
      std::string(exact ? "cnf-exact" : "cnf-atleast") + ".naturality", all_of(cases), opts,
      [&](const Case& c) { return pp_map(c.f, cnf(c.f.domain_size, c.s)); },
      [&](const Case& c) { return cnf(c.f.codomain_size, pp_map(c.f, c.s)); },
      [](const Case& c) { return "f=" + c.f.to_string() + ",S=" + show_family(c.s); }, show_family);
}

std::vector<LawReport> check_atleast_exchange(std::size_t n, const HarnessOptions& opts) {
  using monad::cnf_atleast;
  using Family3 = FlatSet<Family>;
  const std::string prefix = "pp-atleast[" + std::to_string(n) + "].";
  const auto subsets = all_subsets(n);
  const auto singletons = [n](const StateSet& u) {
    std::vector<StateSet> out;
    u.for_each([&](std::size_t x) { out.push_back(StateSet(n, {x})); });
    return Family(std::move(out));
  };
  const auto show3 = [](const Family3& s) { return altdet::to_string(s); };

  std::vector<LawReport> reports;
  const auto units = all_of(subsets);
  reports.push_back(check_paths(
      prefix + "unit-inner-triangle", units, opts, [&](const StateSet& u) { return cnf_atleast(n, Family{u}); },
      singletons, show_set, show_family));
  reports.push_back(check_paths(
      prefix + "unit-outer-triangle", units, opts, [&](const StateSet& u) { return cnf_atleast(n, singletons(u)); },
      [](const StateSet& u) { return Family{u}; }, show_set, show_family));

  // Elements of P(P(P X)): exhaustive while there are at most 2^16 of them.
  std::optional<std::vector<Family3>> all;
  const std::size_t families = std::size_t{1} << subsets.size();
  if (n <= 2) {
    std::vector<Family> fams;
    for (std::uint64_t m = 0; m < families; ++m) fams.push_back(family_from_mask(subsets, m));
    std::vector<Family3> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << fams.size()); ++m) {
      std::vector<Family> members;
      for (std::size_t i = 0; i < fams.size(); ++i)
        if ((m >> i) & 1U) members.push_back(fams[i]);
      out.emplace_back(std::move(members));
    }
    all = std::move(out);
  }
  const auto inputs = enumerated_or_sampled<Family3>(opts, std::move(all), [n](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> count(0, 3);
    std::bernoulli_distribution coin(0.5);
    std::vector<Family> outer;
    for (std::size_t i = count(rng); i > 0; --i) {
      std::vector<StateSet> inner;
      for (std::size_t j = count(rng); j > 0; --j) {
        StateSet u(n);
        for (std::size_t x = 0; x < n; ++x)
          if (coin(rng)) u.insert(x);
        inner.push_back(u);
      }
      outer.emplace_back(std::move(inner));
    }
    return Family3(std::move(outer));
  });

  reports.push_back(check_paths(
      prefix + "mult-inner-rectangle", inputs, opts,
      [&](const Family3& s) {
        Family joined;
        for (const auto& f : s) joined = unite(joined, f);
        return cnf_atleast(n, joined);
      },
      [&](const Family3& s) {
        std::vector<Family> exchanged;
        for (const auto& f : s) exchanged.push_back(cnf_atleast(n, f));
        std::vector<StateSet> out;
        for (const auto& v : cnf_atleast(Family3(std::move(exchanged)))) {
          StateSet u(n);
          for (const auto& w : v) u |= w;
          out.push_back(u);
        }
        return Family(std::move(out));
      },
      show3, show_family));
  reports.push_back(check_paths(
      prefix + "mult-outer-rectangle", inputs, opts,
      [&](const Family3& s) {
        std::vector<StateSet> unions;
        for (const auto& f : s) {
          StateSet u(n);
          for (const auto& w : f) u |= w;
          unions.push_back(u);
        }
        return cnf_atleast(n, Family(std::move(unions)));
      },
      [&](const Family3& s) {
        Family out;
        for (const auto& v : cnf_atleast(s)) out = unite(out, cnf_atleast(n, v));
        return out;
      },
      show3, show_family));
  return reports;
}

}  // namespace altdet::laws
