#include "bici/tower.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bici/errors.hpp"
#include "bici/koszul.hpp"

namespace bici {

namespace {

bool dominated(Bidegree lo, Bidegree hi) { return lo.a <= hi.a && lo.b <= hi.b; }

bool refines_dominance(const GroupedSpec& grouped, std::span<const std::size_t> order) {
  const std::size_t s = grouped.groups.size();
  if (order.size() != s) return false;
  std::vector<bool> seen(s, false);
  for (std::size_t idx : order) {
    if (idx >= s || seen[idx]) return false;
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      if (dominated(grouped.groups[order[j]].degree, grouped.groups[order[i]].degree)) return false;
  return true;
}

}  // namespace

Integer automorphism_group_dimension(AmbientSpace space) {
  const long m = space.m;
  const long n = space.n;
  return Integer(m * m + 2 * m + n * n + 2 * n);
}

TowerReport hilbert_scheme_dimension(const CiSpec& spec) {
  std::vector<std::size_t> order(group(spec).groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return hilbert_scheme_dimension(spec, order);
}

TowerReport hilbert_scheme_dimension(const CiSpec& spec, std::span<const std::size_t> group_order) {
  require_acm(spec);
  const auto grouped = group(spec);
  if (!refines_dominance(grouped, group_order))
    throw InvalidInput("group order is not a permutation refining componentwise dominance");

  TowerReport report;
  std::vector<Bidegree> previous;
  for (std::size_t idx : group_order) {
    const auto& g = grouped.groups[idx];
    TowerLevel level;
    level.degree = g.degree;
    level.multiplicity = g.multiplicity;
    level.ambient_sections = h0_dim(spec.space(), g.degree);
    level.kernel_dim = ideal_h0(spec.space(), previous, g.degree);
    level.rank = level.ambient_sections - level.kernel_dim;
    if (level.rank < g.multiplicity) {
      std::ostringstream os;
      os << spec.to_string() << ": level " << g.degree << " needs " << g.multiplicity
         << " independent forms but only " << level.rank << " remain";
      throw InfeasibleTower(os.str());
    }
    level.fiber_dim = g.multiplicity * (level.rank - g.multiplicity);
    report.hilbert_dim += level.fiber_dim;
    report.levels.push_back(level);
    previous.insert(previous.end(), static_cast<std::size_t>(g.multiplicity), g.degree);
  }
  report.group_dim = automorphism_group_dimension(spec.space());
  report.moduli_dim = report.hilbert_dim - report.group_dim;
  report.stabilizer_finite = stabilizer_is_finite(spec);
  return report;
}

std::vector<std::vector<std::size_t>> admissible_group_orders(const CiSpec& spec) {
  const auto grouped = group(spec);
  std::vector<std::size_t> order(grouped.groups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    if (refines_dominance(grouped, order)) out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

TowerReport moduli_dimension(const CiSpec& spec) { return hilbert_scheme_dimension(spec); }

bool stabilizer_is_finite(const CiSpec& spec) {
  const Bidegree w = dualizing_bidegree(spec);
  return w.a == w.b && w.a > 0;
}

}  // namespace bici
