#pragma once

// Hilbert scheme of complete intersections as an iterated Grassmannian bundle,
// and the dimension of its quotient by PGL(m+1) x PGL(n+1).

#include <span>
#include <vector>

#include "bici/cispec.hpp"
#include "bici/combinat.hpp"

namespace bici {

/// One Grassmannian level Gr(multiplicity, E_r) of the tower.
struct TowerLevel {
  Bidegree degree;
  int multiplicity = 0;
  Integer ambient_sections;  // h^0(X, O(alpha_r, beta_r))
  Integer kernel_dim;        // forms of this bidegree already in the ideal of the previous levels
  Integer rank;              // e_r = ambient_sections - kernel_dim
  Integer fiber_dim;         // multiplicity * (rank - multiplicity)
};

struct TowerReport {
  std::vector<TowerLevel> levels;
  Integer hilbert_dim;
  Integer group_dim;
  Integer moduli_dim;  // hilbert_dim - group_dim
  bool stabilizer_finite = false;
};

/// dim PGL(m+1) x PGL(n+1) = m^2 + 2m + n^2 + 2n
Integer automorphism_group_dimension(AmbientSpace space);

/// Tower over the groups in lexicographic order. Requires an ACM spec; throws
/// InfeasibleTower when some level has rank below its multiplicity.
TowerReport hilbert_scheme_dimension(const CiSpec& spec);

/// Same, taking the groups of group(spec) in the given order. The order must
/// be a permutation of the group indices that refines componentwise
/// dominance: if group i <= group j in both coordinates, i comes first.
/// Throws InvalidInput otherwise.
TowerReport hilbert_scheme_dimension(const CiSpec& spec, std::span<const std::size_t> group_order);

/// All orderings of group(spec) accepted by the overload above.
std::vector<std::vector<std::size_t>> admissible_group_orders(const CiSpec& spec);

/// hilbert_scheme_dimension with the moduli dimension read off.
TowerReport moduli_dimension(const CiSpec& spec);

/// sum a_i - m - 1 == sum b_i - n - 1 > 0
bool stabilizer_is_finite(const CiSpec& spec);

}  // namespace bici
