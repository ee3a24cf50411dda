#pragma once

// Canonical curves cut out by ample divisors in a fixed P^m x P^n.

#include <vector>

#include "bici/cispec.hpp"
#include "bici/combinat.hpp"

namespace bici {

struct CatalogEntry {
  CiSpec spec;
  Integer genus;
  Integer hilbert_dim;
  Integer moduli_dim;
  bool stabilizer_finite = false;
};

/// Every multiset of m+n-1 bidegrees with a_i, b_i >= 1, sum a = m+2 and
/// sum b = n+2 that passes is_acm, annotated with genus and tower dimensions.
/// Sorted by bidegree list.
std::vector<CatalogEntry> enumerate_canonical(AmbientSpace space);

/// Drops an entry when the factor swap maps it onto a smaller entry of the
/// same list. Only has an effect for m == n.
std::vector<CatalogEntry> merge_swap_equivalent(std::vector<CatalogEntry> entries);

}  // namespace bici
