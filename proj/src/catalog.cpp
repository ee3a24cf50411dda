#include "bici/catalog.hpp"

#include <algorithm>
#include <set>

#include "bici/koszul.hpp"
#include "bici/tower.hpp"

namespace bici {

namespace {

// Compositions of total into exactly parts positive entries.
void positive_compositions(long total, std::size_t parts, std::vector<long>& prefix,
                           std::vector<std::vector<long>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  for (long first = 1; first <= total - static_cast<long>(parts - 1); ++first) {
    prefix.push_back(first);
    positive_compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<long>> positive_compositions(long total, std::size_t parts) {
  std::vector<std::vector<long>> out;
  std::vector<long> prefix;
  positive_compositions(total, parts, prefix, out);
  return out;
}

}  // namespace

std::vector<CatalogEntry> enumerate_canonical(AmbientSpace space) {
  const std::size_t c = static_cast<std::size_t>(space.m + space.n - 1);
  const auto xs = positive_compositions(space.m + 2, c);
  const auto ys = positive_compositions(space.n + 2, c);

  std::set<std::vector<Bidegree>> multisets;
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      std::vector<Bidegree> degrees(c);
      for (std::size_t i = 0; i < c; ++i) degrees[i] = {x[i], y[i]};
      std::sort(degrees.begin(), degrees.end());
      multisets.insert(std::move(degrees));
    }
  }

  std::vector<CatalogEntry> entries;
  for (const auto& degrees : multisets) {
    auto spec = CiSpec::make(space, degrees);
    if (!is_acm(spec)) continue;
    const auto genus = genus_of_curve(spec);
    const auto tower = hilbert_scheme_dimension(spec);
    entries.push_back({spec, genus.genus, tower.hilbert_dim, tower.moduli_dim, tower.stabilizer_finite});
  }
  return entries;
}

std::vector<CatalogEntry> merge_swap_equivalent(std::vector<CatalogEntry> entries) {
  if (entries.empty() || entries.front().spec.space().m != entries.front().spec.space().n) return entries;
  std::set<std::vector<Bidegree>> present;
  for (const auto& e : entries) present.insert(e.spec.bidegrees());
  std::erase_if(entries, [&](const CatalogEntry& e) {
    const auto& mirror = e.spec.swapped().bidegrees();
    return mirror < e.spec.bidegrees() && present.count(mirror) > 0;
  });
  return entries;
}

}  // namespace bici
