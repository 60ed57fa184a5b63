#include "altdet/poset.hpp"

#include <cmath>

namespace altdet {

std::vector<StateSet> all_subsets(std::size_t carrier) {
  if (carrier > order::kEnumerationBound)
    throw CapacityError("all_subsets: carrier " + std::to_string(carrier) + " above bound " +
                        std::to_string(order::kEnumerationBound));
  std::vector<StateSet> out;
  out.reserve(std::size_t{1} << carrier);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << carrier); ++m)
    out.push_back(StateSet::from_mask(carrier, m));
  return out;
}

}  // namespace altdet

namespace altdet::order {

FinitePoset::FinitePoset(std::size_t size,
                         const std::function<bool(std::size_t, std::size_t)>& leq) {
  up_.assign(size, StateSet(size));
  down_.assign(size, StateSet(size));
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (leq(x, y)) {
        up_[x].insert(y);
        down_[y].insert(x);
      }
  for (std::size_t x = 0; x < size; ++x) {
    if (!up_[x].contains(x))
      throw DomainError("order relation is not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && up_[x].contains(y) && up_[y].contains(x))
        throw DomainError("order relation is not antisymmetric on " + std::to_string(x) + "," +
                          std::to_string(y));
      // x <= y implies up(y) within up(x)
      if (up_[x].contains(y) && !up_[y].is_subset_of(up_[x]))
        throw DomainError("order relation is not transitive through " + std::to_string(y));
    }
  }
}

FinitePoset FinitePoset::discrete(std::size_t size) {
  return FinitePoset(size, [](std::size_t x, std::size_t y) { return x == y; });
}

FinitePoset FinitePoset::chain(std::size_t size) {
  return FinitePoset(size, [](std::size_t x, std::size_t y) { return x <= y; });
}

FinitePoset FinitePoset::from_covers(
    std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<std::vector<bool>> rel(size, std::vector<bool>(size, false));
  for (std::size_t x = 0; x < size; ++x) rel[x][x] = true;
  for (auto [x, y] : covers) {
    if (x >= size || y >= size) throw DomainError("cover pair outside carrier");
    rel[x][y] = true;
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < size; ++j)
          if (rel[k][j]) rel[i][j] = true;
  return FinitePoset(size, [&](std::size_t x, std::size_t y) { return rel[x][y]; });
}

FinitePoset FinitePoset::diamond() { return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

bool FinitePoset::is_discrete() const {
  for (const auto& u : up_)
    if (u.count() != 1) return false;
  return true;
}

std::string FinitePoset::to_string() const {
  std::string out = "poset(" + std::to_string(size());
  char sep = ':';
  for (std::size_t x = 0; x < size(); ++x)
    up_[x].for_each([&](std::size_t y) {
      if (y == x) return;
      out += sep + std::to_string(x) + "<" + std::to_string(y);
      sep = ',';
    });
  return out + ")";
}

std::vector<FinitePoset> all_posets(std::size_t size) {
  if (size > 4) throw CapacityError("all_posets: size above 4");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (x != y) pairs.emplace_back(x, y);
  std::vector<FinitePoset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    auto rel = [&](std::size_t x, std::size_t y) {
      if (x == y) return true;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (pairs[k] == std::pair{x, y}) return ((m >> k) & 1U) != 0;
      return false;
    };
    try {
      out.emplace_back(size, rel);
    } catch (const DomainError&) {
    }
  }
  return out;
}

FiniteFunction::FiniteFunction(std::size_t codomain, std::vector<std::size_t> entries)
    : domain_size{entries.size()}, codomain_size{codomain}, table{std::move(entries)} {
  for (auto v : table)
    if (v >= codomain_size)
      throw DomainError("function value " + std::to_string(v) + " outside codomain of size " +
                        std::to_string(codomain_size));
}

FiniteFunction FiniteFunction::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return FiniteFunction(n, std::move(t));
}

StateSet FiniteFunction::image(const StateSet& s) const {
  if (s.carrier_size() != domain_size)
    throw DomainError("image: set over carrier " + std::to_string(s.carrier_size()) +
                      " given to a function with domain " + std::to_string(domain_size));
  StateSet out(codomain_size);
  s.for_each([&](std::size_t x) { out.insert(table[x]); });
  return out;
}

FiniteFunction FiniteFunction::after(const FiniteFunction& first) const {
  if (first.codomain_size != domain_size) throw DomainError("composition type mismatch");
  std::vector<std::size_t> t(first.domain_size);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = table[first.table[i]];
  return FiniteFunction(codomain_size, std::move(t));
}

std::string FiniteFunction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(table[i]);
  }
  return out + "]";
}

std::vector<FiniteFunction> all_functions(std::size_t domain, std::size_t codomain) {
  const double total = std::pow(static_cast<double>(codomain), static_cast<double>(domain));
  if (total > 1e6) throw CapacityError("all_functions: more than 10^6 functions");
  std::vector<FiniteFunction> out;
  if (codomain == 0 && domain > 0) return out;
  std::vector<std::size_t> t(domain, 0);
  while (true) {
    out.emplace_back(codomain, t);
    std::size_t i = domain;
    while (i > 0) {
      --i;
      if (++t[i] < codomain) break;
      t[i] = 0;
      if (i == 0) return out;
    }
    if (domain == 0) return out;
  }
}

MonotoneMap::MonotoneMap(FinitePoset domain, FinitePoset codomain, std::vector<std::size_t> table)
    : domain_{std::move(domain)}, codomain_{std::move(codomain)} {
  if (table.size() != domain_.size()) throw DomainError("monotone map: table size mismatch");
  fn_ = FiniteFunction(codomain_.size(), std::move(table));
  for (std::size_t x = 0; x < domain_.size(); ++x)
    domain_.above(x).for_each([&](std::size_t y) {
      if (!codomain_.leq(fn_(x), fn_(y)))
        throw DomainError("map is not monotone at " + std::to_string(x) + "<=" +
                          std::to_string(y));
    });
}

std::vector<MonotoneMap> all_monotone_maps(const FinitePoset& domain,
                                           const FinitePoset& codomain) {
  std::vector<MonotoneMap> out;
  for (const auto& f : all_functions(domain.size(), codomain.size())) {
    bool monotone = true;
    for (std::size_t x = 0; x < domain.size() && monotone; ++x)
      domain.above(x).for_each([&](std::size_t y) {
        if (!codomain.leq(f(x), f(y))) monotone = false;
      });
    if (monotone) out.emplace_back(domain, codomain, f.table);
  }
  return out;
}

namespace {

void check_carrier(const FinitePoset& poset, const StateSet& p) {
  if (p.carrier_size() != poset.size())
    throw DomainError("carrier-size mismatch: set over " + std::to_string(p.carrier_size()) +
                      ", poset of size " + std::to_string(poset.size()));
}

}  // namespace

StateSet up_closure(const FinitePoset& poset, const StateSet& p) {
  check_carrier(poset, p);
  StateSet out(poset.size());
  p.for_each([&](std::size_t y) { out |= poset.above(y); });
  return out;
}

StateSet down_closure(const FinitePoset& poset, const StateSet& p) {
  check_carrier(poset, p);
  StateSet out(poset.size());
  p.for_each([&](std::size_t y) { out |= poset.below(y); });
  return out;
}

bool is_up_closed(const FinitePoset& poset, const StateSet& p) {
  check_carrier(poset, p);
  bool closed = true;
  p.for_each([&](std::size_t x) { closed = closed && poset.above(x).is_subset_of(p); });
  return closed;
}

bool is_down_closed(const FinitePoset& poset, const StateSet& p) {
  check_carrier(poset, p);
  bool closed = true;
  p.for_each([&](std::size_t x) { closed = closed && poset.below(x).is_subset_of(p); });
  return closed;
}

namespace {

template <class Closed>
std::vector<StateSet> filter_subsets(const FinitePoset& poset, Closed closed) {
  const std::size_t n = poset.size();
  if (n > kEnumerationBound)
    throw CapacityError("closed-set enumeration: poset of size " + std::to_string(n) +
                        " above bound " + std::to_string(kEnumerationBound));
  // Masks of the neighbourhoods, so the filter runs on plain integers.
  std::vector<std::uint64_t> hood(n);
  for (std::size_t x = 0; x < n; ++x) hood[x] = closed(x).word(0);
  std::vector<StateSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = true;
    for (std::uint64_t bits = m; bits != 0 && ok; bits &= bits - 1)
      ok = (hood[static_cast<std::size_t>(std::countr_zero(bits))] & ~m) == 0;
    if (ok) out.push_back(StateSet::from_mask(n, m));
  }
  return out;
}

}  // namespace

std::vector<StateSet> enumerate_up_sets(const FinitePoset& poset) {
  return filter_subsets(poset, [&](std::size_t x) -> const StateSet& { return poset.above(x); });
}

std::vector<StateSet> enumerate_down_sets(const FinitePoset& poset) {
  return filter_subsets(poset, [&](std::size_t x) -> const StateSet& { return poset.below(x); });
}

}  // namespace altdet::order
