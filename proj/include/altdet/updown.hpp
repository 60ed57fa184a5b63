#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "altdet/poset.hpp"
#include "altdet/state_set.hpp"

namespace altdet::monad {

using order::FinitePoset;
using order::MonotoneMap;

enum class Direction { up, down };

inline const char* to_string(Direction d) { return d == Direction::up ? "up" : "down"; }

/// The poset Up(P) (up-sets under reversed inclusion) or Dn(P) (down-sets under
/// inclusion), with its elements indexed so that it can serve as a carrier itself.
class Layer {
 public:
  static Layer up(const FinitePoset& base);
  static Layer down(const FinitePoset& base);
  static Layer of(Direction d, const FinitePoset& base) { return d == Direction::up ? up(base) : down(base); }

  Direction direction() const noexcept { return direction_; }
  const FinitePoset& base() const noexcept { return base_; }
  const FinitePoset& order() const noexcept { return order_; }
  const std::vector<StateSet>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const StateSet& operator[](std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> find(const StateSet& s) const;
  /// DomainError when `s` is not closed in the base poset.
  std::size_t index_of(const StateSet& s) const;

  /// Closure in the base poset matching the layer's direction.
  StateSet close(const StateSet& s) const;
  bool is_closed(const StateSet& s) const;

 private:
  Layer(Direction d, const FinitePoset& base);

  Direction direction_ = Direction::up;
  FinitePoset base_;
  FinitePoset order_;
  std::vector<StateSet> elements_;
  std::unordered_map<StateSet, std::size_t, StateSetHash> index_;
};

// Up monad on posets.

/// ↑f_*(u); u must be up-closed in f's domain.
StateSet up_map(const MonotoneMap& f, const StateSet& u);
/// ↑{x}
StateSet up_unit(const FinitePoset& poset, std::size_t x);
/// ∪family; family must consist of up-sets and contain every up-set below a member.
StateSet up_mult(const FinitePoset& poset, const std::vector<StateSet>& family);

// Dn monad on posets.

StateSet dn_map(const MonotoneMap& f, const StateSet& d);
StateSet dn_unit(const FinitePoset& poset, std::size_t x);
StateSet dn_mult(const FinitePoset& poset, const std::vector<StateSet>& family);

/// λ(S) = {T down-set | ∀u ∈ S, u ∩ T ≠ ∅} for S an element of Dn(Up X) given as a family
/// of up-sets. The input must be a down-set of Up(X), i.e. ⊆-upward closed.
std::vector<StateSet> dist_dn_up(const FinitePoset& poset, const std::vector<StateSet>& s);

// Layer-level arrows. Elements of T(T X) are StateSets over the indices of the layer T X.

/// T(f): T(X) -> T(Y) as a monotone map between layer orders.
MonotoneMap lift(const Layer& from, const Layer& to, const MonotoneMap& f);
/// η: X -> T(X), x ↦ closure of {x}.
MonotoneMap unit_map(const Layer& layer);
/// μ: T(T X) -> T(X), union of the inner elements; `outer` is a layer over `inner.order()`.
MonotoneMap mult_map(const Layer& outer, const Layer& inner);
/// Union of the `inner` elements indexed by `s`.
StateSet flatten(const Layer& inner, const StateSet& s);
/// λ as a map Dn(Up X) -> Up(Dn X). `dn_up` is Layer::down(up_x.order()) and `up_dn` is
/// Layer::up(dn_x.order()).
MonotoneMap dist_map(const Layer& up_x, const Layer& dn_x, const Layer& dn_up, const Layer& up_dn);
/// λ on a single element of Dn(Up X) given over the indices of `up_x`; result over `dn_x`.
StateSet dist_dn_up(const Layer& up_x, const Layer& dn_x, const StateSet& s);

// Do ⊣ U: both functors are identities on elements, so unit and counit are identity tables.

/// η_S: S -> U(Do S)
order::FiniteFunction discrete_adjunction_unit(std::size_t set_size);
/// ε_P: Do(U P) -> P; monotone because the domain is discrete.
MonotoneMap discrete_adjunction_counit(const FinitePoset& poset);

}  // namespace altdet::monad
