#pragma once

// Complete intersections in P^m x P^n described by the bidegrees of their
// defining forms, and the combinatorial criteria evaluated on those bidegrees.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bici/combinat.hpp"

namespace bici {

/// An ambient together with a lexicographically sorted multiset of generator
/// bidegrees. Always satisfies 1 <= c <= m+n-1, a_i, b_i >= 0, a_i + b_i >= 2.
class CiSpec {
public:
  /// Validates and sorts. Throws InvalidInput with a diagnostic naming the
  /// first violated condition.
  static CiSpec make(int m, int n, const std::vector<std::pair<long, long>>& pairs);
  static CiSpec make(AmbientSpace space, std::vector<Bidegree> bidegrees);

  const AmbientSpace& space() const { return space_; }
  const std::vector<Bidegree>& bidegrees() const { return bidegrees_; }
  std::size_t codim() const { return bidegrees_.size(); }
  int dimension() const { return space_.dimension() - static_cast<int>(codim()); }
  /// (sum a_i, sum b_i)
  Bidegree total() const;

  /// Factors exchanged, every bidegree reversed.
  CiSpec swapped() const;

  std::string to_string() const;

  friend bool operator==(const CiSpec&, const CiSpec&) = default;

private:
  CiSpec(AmbientSpace space, std::vector<Bidegree> bidegrees)
      : space_(space), bidegrees_(std::move(bidegrees)) {}

  AmbientSpace space_;
  std::vector<Bidegree> bidegrees_;
};

struct DegreeGroup {
  Bidegree degree;
  int multiplicity = 0;

  friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;
};

/// Distinct bidegrees with multiplicities, strictly increasing.
struct GroupedSpec {
  std::vector<DegreeGroup> groups;
};

GroupedSpec group(const CiSpec& spec);

/// sum_i max(a_i - b_i, 0) <= m and sum_i max(b_i - a_i, 0) <= n, i.e. every
/// subset sum of (a_i - b_i) stays below m+1 and of (b_i - a_i) below n+1.
bool is_regular_sequence_criterion(const CiSpec& spec);

/// The regular-sequence criterion is only an equivalence when the P^1 factor
/// (if any) carries no generator tilted towards it: m = 1 with some a_i > b_i,
/// or n = 1 with some b_i > a_i. The predicate is still evaluated; this flag
/// tells the caller its answer is outside the proven range.
bool regular_criterion_outside_hypothesis(const CiSpec& spec);

/// Ordering conditions. For every gamma and every subset S not containing it,
///   |S| = m:  sum_S a < a_gamma + m + 1  or  b_gamma < sum_S b
///   |S| = n:  sum_S b < b_gamma + n + 1  or  a_gamma < sum_S a
/// These are exactly the vanishings h^m = h^n = 0 of O(gamma - sum_S) that
/// the Koszul complex needs for H^0(X, O(gamma)) -> H^0(Y_S, O(gamma)) to be
/// onto; subsets of any other size only meet vanishing cohomology.
bool is_acm_order(const CiSpec& spec);

/// The same inequalities imposed on every nonempty S regardless of size.
/// Stronger than is_acm_order; reported for comparison.
bool is_acm_order_all_subsets(const CiSpec& spec);

/// Regular sequence criterion and ordering conditions together.
bool is_acm(const CiSpec& spec);

/// Name of the first failing ACM criterion, or nullopt when every criterion holds.
std::optional<std::string> acm_violation(const CiSpec& spec);

/// Throws NotAcm carrying acm_violation's diagnostic.
void require_acm(const CiSpec& spec);

/// (sum a_i - m - 1, sum b_i - n - 1)
Bidegree dualizing_bidegree(const CiSpec& spec);

/// Curve cut out by ample divisors (a_i, b_i >= 1) with dualizing sheaf O(1,1).
bool is_canonical_ample(const CiSpec& spec);

/// Bidegrees of hypersurfaces sharing the Hilbert polynomial of a hypersurface
/// of bidegree d. Candidates other than d itself are confirmed by comparing
/// Hilbert polynomials. Throws InvalidInput unless a, b >= 0 and a + b >= 2.
std::vector<Bidegree> hypersurface_hp_ambiguity(AmbientSpace space, Bidegree d);

}  // namespace bici
