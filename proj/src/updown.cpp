#include "altdet/updown.hpp"

#include "altdet/powerset.hpp"

namespace altdet::monad {

StateSet pow_mult(std::size_t carrier, std::span<const StateSet> sets) {
  StateSet out(carrier);
  for (const auto& s : sets) out |= s;
  return out;
}

StateSet pow_mult(std::size_t carrier, const StateSet& top, std::span<const StateSet> inner) {
  if (top.carrier_size() != inner.size())
    throw DomainError("pow_mult: outer set over " + std::to_string(top.carrier_size()) +
                      " points, " + std::to_string(inner.size()) + " inner sets");
  StateSet out(carrier);
  top.for_each([&](std::size_t i) { out |= inner[i]; });
  return out;
}

Layer::Layer(Direction d, const FinitePoset& base) : direction_{d}, base_{base} {
  elements_ = d == Direction::up ? order::enumerate_up_sets(base) : order::enumerate_down_sets(base);
  if (elements_.size() > StateSet::kMaxCarrier)
    throw CapacityError("layer " + std::string(to_string(d)) + "(" + base.to_string() + ") has " +
                        std::to_string(elements_.size()) + " elements, above the " +
                        std::to_string(StateSet::kMaxCarrier) + "-element carrier bound");
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  const bool reversed = d == Direction::up;
  order_ = FinitePoset(elements_.size(), [&](std::size_t i, std::size_t j) {
    return reversed ? elements_[j].is_subset_of(elements_[i]) : elements_[i].is_subset_of(elements_[j]);
  });
}

Layer Layer::up(const FinitePoset& base) { return Layer(Direction::up, base); }
Layer Layer::down(const FinitePoset& base) { return Layer(Direction::down, base); }

std::optional<std::size_t> Layer::find(const StateSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Layer::index_of(const StateSet& s) const {
  if (auto i = find(s)) return *i;
  throw DomainError(s.to_string() + " is not " + (direction_ == Direction::up ? "up" : "down") +
                    "-closed in " + base_.to_string());
}

StateSet Layer::close(const StateSet& s) const {
  return direction_ == Direction::up ? order::up_closure(base_, s) : order::down_closure(base_, s);
}

bool Layer::is_closed(const StateSet& s) const {
  return direction_ == Direction::up ? order::is_up_closed(base_, s) : order::is_down_closed(base_, s);
}

namespace {

void require_up(const FinitePoset& p, const StateSet& u, const char* op) {
  if (!order::is_up_closed(p, u))
    throw DomainError(std::string(op) + ": " + u.to_string() + " is not up-closed");
}

void require_down(const FinitePoset& p, const StateSet& d, const char* op) {
  if (!order::is_down_closed(p, d))
    throw DomainError(std::string(op) + ": " + d.to_string() + " is not down-closed");
}

bool contains(const std::vector<StateSet>& family, const StateSet& s) {
  for (const auto& f : family)
    if (f == s) return true;
  return false;
}

// Every closed set strictly below a member is reached by repeatedly dropping one extreme
// point, so checking single drops decides whether the family is closed downwards.
void require_family_shrink_closed(const FinitePoset& p, const std::vector<StateSet>& family,
                                  bool up_sets, const char* op) {
  for (const auto& u : family) {
    u.for_each([&](std::size_t x) {
      // x is minimal in u (for up-sets) or maximal in u (for down-sets)
      const StateSet& side = up_sets ? p.below(x) : p.above(x);
      if ((side & u) == StateSet(p.size(), {x})) {
        StateSet smaller = u;
        smaller.erase(x);
        if (!contains(family, smaller))
          throw DomainError(std::string(op) + ": family contains " + u.to_string() + " but not " +
                            smaller.to_string());
      }
    });
  }
}

}  // namespace

StateSet up_map(const MonotoneMap& f, const StateSet& u) {
  require_up(f.domain(), u, "up_map");
  return order::up_closure(f.codomain(), f.image(u));
}

StateSet up_unit(const FinitePoset& poset, std::size_t x) {
  if (x >= poset.size()) throw DomainError("up_unit: element outside carrier");
  return poset.above(x);
}

StateSet up_mult(const FinitePoset& poset, const std::vector<StateSet>& family) {
  for (const auto& u : family) require_up(poset, u, "up_mult");
  require_family_shrink_closed(poset, family, true, "up_mult");
  return pow_mult(poset.size(), family);
}

StateSet dn_map(const MonotoneMap& f, const StateSet& d) {
  require_down(f.domain(), d, "dn_map");
  return order::down_closure(f.codomain(), f.image(d));
}

StateSet dn_unit(const FinitePoset& poset, std::size_t x) {
  if (x >= poset.size()) throw DomainError("dn_unit: element outside carrier");
  return poset.below(x);
}

StateSet dn_mult(const FinitePoset& poset, const std::vector<StateSet>& family) {
  for (const auto& d : family) require_down(poset, d, "dn_mult");
  require_family_shrink_closed(poset, family, false, "dn_mult");
  return pow_mult(poset.size(), family);
}

std::vector<StateSet> dist_dn_up(const FinitePoset& poset, const std::vector<StateSet>& s) {
  for (const auto& u : s) require_up(poset, u, "dist_dn_up");
  // s is a down-set of Up(X) under reversed inclusion: it holds every up-set above a member.
  for (const auto& u : s) {
    for (std::size_t x = 0; x < poset.size(); ++x) {
      if (u.contains(x)) continue;
      StateSet strict_above = poset.above(x);
      strict_above.erase(x);
      if (!strict_above.is_subset_of(u)) continue;
      StateSet bigger = u;
      bigger.insert(x);
      if (!contains(s, bigger))
        throw DomainError("dist_dn_up: family contains " + u.to_string() + " but not " +
                          bigger.to_string());
    }
  }
  std::vector<StateSet> out;
  for (const auto& t : order::enumerate_down_sets(poset)) {
    bool meets_all = true;
    for (const auto& u : s)
      if (!u.intersects(t)) {
        meets_all = false;
        break;
      }
    if (meets_all) out.push_back(t);
  }
  return out;
}

MonotoneMap lift(const Layer& from, const Layer& to, const MonotoneMap& f) {
  if (from.direction() != to.direction()) throw DomainError("lift: layers of different kinds");
  if (!(from.base() == f.domain()) || !(to.base() == f.codomain()))
    throw DomainError("lift: map does not match the layers' base posets");
  std::vector<std::size_t> table(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) table[i] = to.index_of(to.close(f.image(from[i])));
  return MonotoneMap(from.order(), to.order(), std::move(table));
}

MonotoneMap unit_map(const Layer& layer) {
  const std::size_t n = layer.base().size();
  std::vector<std::size_t> table(n);
  for (std::size_t x = 0; x < n; ++x) table[x] = layer.index_of(layer.close(StateSet(n, {x})));
  return MonotoneMap(layer.base(), layer.order(), std::move(table));
}

StateSet flatten(const Layer& inner, const StateSet& s) {
  if (s.carrier_size() != inner.size())
    throw DomainError("flatten: set over " + std::to_string(s.carrier_size()) + " points, layer has " +
                      std::to_string(inner.size()));
  return pow_mult(inner.base().size(), s, inner.elements());
}

MonotoneMap mult_map(const Layer& outer, const Layer& inner) {
  if (outer.direction() != inner.direction() || !(outer.base() == inner.order()))
    throw DomainError("mult_map: outer layer is not built over the inner layer");
  std::vector<std::size_t> table(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) table[i] = inner.index_of(flatten(inner, outer[i]));
  return MonotoneMap(outer.order(), inner.order(), std::move(table));
}

StateSet dist_dn_up(const Layer& up_x, const Layer& dn_x, const StateSet& s) {
  if (s.carrier_size() != up_x.size()) throw DomainError("dist_dn_up: element not over Up(X)");
  StateSet out(dn_x.size());
  for (std::size_t t = 0; t < dn_x.size(); ++t) {
    bool meets_all = true;
    s.for_each([&](std::size_t u) { meets_all = meets_all && up_x[u].intersects(dn_x[t]); });
    if (meets_all) out.insert(t);
  }
  return out;
}

MonotoneMap dist_map(const Layer& up_x, const Layer& dn_x, const Layer& dn_up, const Layer& up_dn) {
  if (up_x.direction() != Direction::up || dn_x.direction() != Direction::down ||
      dn_up.direction() != Direction::down || up_dn.direction() != Direction::up)
    throw DomainError("dist_map: layer kinds do not match Dn(Up X) -> Up(Dn X)");
  if (!(dn_up.base() == up_x.order()) || !(up_dn.base() == dn_x.order()) ||
      !(up_x.base() == dn_x.base()))
    throw DomainError("dist_map: layers are not built over the same poset");
  std::vector<std::size_t> table(dn_up.size());
  for (std::size_t i = 0; i < dn_up.size(); ++i)
    table[i] = up_dn.index_of(dist_dn_up(up_x, dn_x, dn_up[i]));
  return MonotoneMap(dn_up.order(), up_dn.order(), std::move(table));
}

order::FiniteFunction discrete_adjunction_unit(std::size_t set_size) {
  return order::FiniteFunction::identity(set_size);
}

MonotoneMap discrete_adjunction_counit(const FinitePoset& poset) {
  return MonotoneMap(FinitePoset::discrete(poset.size()), poset,
                     order::FiniteFunction::identity(poset.size()).table);
}

}  // namespace altdet::monad
