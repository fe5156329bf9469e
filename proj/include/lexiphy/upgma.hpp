#ifndef LEXIPHY_UPGMA_HPP
#define LEXIPHY_UPGMA_HPP

#include <string>
#include <vector>

#include "lexiphy/distance_matrix.hpp"
#include "lexiphy/tree.hpp"

namespace lexiphy {

// Average-linkage agglomeration: repeatedly merge the two clusters with the
// smallest mean pairwise distance; the new node sits at half that distance.
// Ties are broken by the lexicographically smallest pair of cluster labels
// (a cluster is labelled by its smallest leaf), so identical input bits
// always produce identical trees. Output is ultrametric.
Tree upgma(const std::vector<std::string>& labels,
           const std::vector<double>& condensed);
Tree upgma(const DistanceMatrix& m);
Tree upgma(const TimeMatrix& m);

}  // namespace lexiphy

#endif
