#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "altdet/state_set.hpp"

namespace altdet::order {

/// Largest carrier for which closed sets are enumerated by filtering all subsets.
inline constexpr std::size_t kEnumerationBound = 20;

/// A finite partial order on {0, ..., size()-1}.
///
/// The relation is stored densely as one up-set and one down-set mask per element.
/// Construction rejects relations that are not reflexive, antisymmetric and transitive.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `leq(x, y)` is queried for every pair; throws DomainError if it is not a partial order.
  FinitePoset(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq);

  static FinitePoset discrete(std::size_t size);
  static FinitePoset chain(std::size_t size);
  /// Reflexive-transitive closure of the given strict cover pairs (x below y).
  static FinitePoset from_covers(std::size_t size,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers);
  /// 0 below 1 and 2, both below 3.
  static FinitePoset diamond();

  std::size_t size() const noexcept { return up_.size(); }

  bool leq(std::size_t x, std::size_t y) const { return up_.at(x).contains(y); }

  /// {y | x <= y}
  const StateSet& above(std::size_t x) const { return up_.at(x); }
  /// {y | y <= x}
  const StateSet& below(std::size_t x) const { return down_.at(x); }

  bool is_discrete() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

  std::string to_string() const;

 private:
  std::vector<StateSet> up_;
  std::vector<StateSet> down_;
};

/// Every partial order on {0..size-1} (labelled), size <= 4.
std::vector<FinitePoset> all_posets(std::size_t size);

/// A total function between finite sets, given by its table.
struct FiniteFunction {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::size_t> table;

  FiniteFunction() = default;
  FiniteFunction(std::size_t codomain, std::vector<std::size_t> entries);

  static FiniteFunction identity(std::size_t n);

  std::size_t operator()(std::size_t x) const { return table.at(x); }

  /// Direct image f_*(s).
  StateSet image(const StateSet& s) const;

  /// this after `first`
  FiniteFunction after(const FiniteFunction& first) const;

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

  std::string to_string() const;
};

/// Every function {0..domain-1} -> {0..codomain-1}, in lexicographic table order.
std::vector<FiniteFunction> all_functions(std::size_t domain, std::size_t codomain);

/// A monotone map between finite posets; construction rejects non-monotone tables.
class MonotoneMap {
 public:
  MonotoneMap(FinitePoset domain, FinitePoset codomain, std::vector<std::size_t> table);

  const FinitePoset& domain() const noexcept { return domain_; }
  const FinitePoset& codomain() const noexcept { return codomain_; }
  const FiniteFunction& function() const noexcept { return fn_; }

  std::size_t operator()(std::size_t x) const { return fn_(x); }
  StateSet image(const StateSet& s) const { return fn_.image(s); }

 private:
  FinitePoset domain_;
  FinitePoset codomain_;
  FiniteFunction fn_;
};

/// Every monotone map between two posets (domain and codomain of size <= 4).
std::vector<MonotoneMap> all_monotone_maps(const FinitePoset& domain, const FinitePoset& codomain);

StateSet up_closure(const FinitePoset& poset, const StateSet& p);
StateSet down_closure(const FinitePoset& poset, const StateSet& p);
bool is_up_closed(const FinitePoset& poset, const StateSet& p);
bool is_down_closed(const FinitePoset& poset, const StateSet& p);

/// All up-closed subsets, in increasing numeric order. CapacityError above kEnumerationBound.
std::vector<StateSet> enumerate_up_sets(const FinitePoset& poset);
std::vector<StateSet> enumerate_down_sets(const FinitePoset& poset);

}  // namespace altdet::order
