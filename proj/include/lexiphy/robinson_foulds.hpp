#ifndef LEXIPHY_ROBINSON_FOULDS_HPP
#define LEXIPHY_ROBINSON_FOULDS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lexiphy/lexstat.hpp"
#include "lexiphy/tree.hpp"

namespace lexiphy {

// Rooted Robinson-Foulds difference: the size of the symmetric difference
// between the two trees' clade sets. 0 iff the topologies are identical.
// Note the rooted-clade variant gives different numbers than unrooted
// bipartition RF on the same trees. Throws LeafSetMismatchError when the
// trees cover different leaves.
int rf_difference(const Tree& a, const Tree& b);

// RF between the tree built from the top-n meanings and the tree built from
// the full list, for each n in the grid. The value at n = M is 0.
std::vector<std::pair<std::size_t, int>> rf_curve(
    const FamilyDataset& ds, const StabilityTable& t,
    std::span<const std::size_t> grid,
    SynonymPolicy policy = SynonymPolicy::kFirst);

}  // namespace lexiphy

#endif
