#include "lexiphy/robinson_foulds.hpp"

#include <algorithm>
#include <stdexcept>

#include "lexiphy/errors.hpp"
#include "lexiphy/upgma.hpp"

namespace lexiphy {

int rf_difference(const Tree& a, const Tree& b) {
  if (a.leaf_labels() != b.leaf_labels()) {
    throw LeafSetMismatchError("trees cover different leaf sets");
  }
  const auto ca = clades(a);
  const auto cb = clades(b);
  std::size_t shared = 0;
  for (const auto& clade : ca) {
    if (cb.count(clade)) ++shared;
  }
  return static_cast<int>(ca.size() + cb.size() - 2 * shared);
}

std::vector<std::pair<std::size_t, int>> rf_curve(const FamilyDataset& ds,
                                                  const StabilityTable& t,
                                                  std::span<const std::size_t> grid,
                                                  SynonymPolicy policy) {
  const std::size_t m = ds.meaning_count();
  for (std::size_t n : grid) {
    if (n < 1 || n > m) {
      throw std::invalid_argument("grid values must lie in [1, M]");
    }
  }
  const Tree full = upgma(truncated_distance(ds, t, m, policy));
  std::vector<std::pair<std::size_t, int>> curve;
  curve.reserve(grid.size());
  for (std::size_t n : grid) {
    const Tree truncated = upgma(truncated_distance(ds, t, n, policy));
    curve.emplace_back(n, rf_difference(truncated, full));
  }
  return curve;
}

}  // namespace lexiphy
