#pragma once

#include <cstddef>
#include <span>

#include "altdet/poset.hpp"
#include "altdet/state_set.hpp"

namespace altdet::monad {

using order::FiniteFunction;

/// Direct image {f(x) | x ∈ s}.
inline StateSet pow_map(const FiniteFunction& f, const StateSet& s) { return f.image(s); }

/// {x}
inline StateSet pow_unit(std::size_t carrier, std::size_t x) {
  if (x >= carrier) throw DomainError("pow_unit: element outside carrier");
  return StateSet(carrier, {x});
}

/// Union of the given sets over {0..carrier-1}.
StateSet pow_mult(std::size_t carrier, std::span<const StateSet> sets);

/// Union of inner[i] for i ∈ top: μ applied to an element of P(P X) over a local carrier.
StateSet pow_mult(std::size_t carrier, const StateSet& top, std::span<const StateSet> inner);

}  // namespace altdet::monad
