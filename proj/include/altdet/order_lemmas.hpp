#pragma once

#include <cstddef>

#include "altdet/law_report.hpp"

namespace altdet::order {

/// For every poset P of size <= max_n and every family S of down-sets of P:
/// the union of the ⊆-down-closure of S within Dn(P) equals ∪S.
LawReport check_closure_union_lemma(std::size_t max_n, const HarnessOptions& opts = {});

/// For every monotone f: P -> Q with |P|, |Q| <= max_n and every p ⊆ P:
/// ↑f(↑p) = ↑f(p) and ↓f(↓p) = ↓f(p). Two reports, up then down.
std::pair<LawReport, LawReport> check_closure_image_lemma(std::size_t max_n, const HarnessOptions& opts = {});

/// For every poset P of size <= max_n, family S of up-sets and down-set t:
/// t meets every member of the ⊆-up-closure of S within Up(P) iff it meets every member of S.
LawReport check_closure_intersection_lemma(std::size_t max_n, const HarnessOptions& opts = {});

}  // namespace altdet::order
