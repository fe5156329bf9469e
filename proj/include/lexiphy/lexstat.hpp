#ifndef LEXIPHY_LEXSTAT_HPP
#define LEXIPHY_LEXSTAT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexiphy/dataset.hpp"
#include "lexiphy/distance_matrix.hpp"

namespace lexiphy {

// Distance between two present cells under the given synonym policy.
// kFirst compares the first-listed forms, kMin takes the minimum over the
// cross product of forms.
double cell_distance(const Cell& a, const Cell& b, SynonymPolicy policy);

// Lexical distance matrix: for each language pair, the mean cell distance
// over the selected meanings present in both languages. The denominator is
// the number of such meanings, recorded as the pair's support. Meanings are
// always accumulated in ascending dataset index order, so the same selection
// yields bit-identical entries regardless of how it was expressed.
// Throws NoSharedMeaningsError when a pair shares no selected meaning.
DistanceMatrix language_distance(const FamilyDataset& ds,
                                 SynonymPolicy policy = SynonymPolicy::kFirst);
DistanceMatrix language_distance(const FamilyDataset& ds,
                                 std::span<const std::size_t> meanings,
                                 SynonymPolicy policy = SynonymPolicy::kFirst);

struct StabilityRow {
  std::string meaning;
  std::size_t meaning_index = 0;  // position in the dataset's meaning list
  double value = 0.0;             // S(i), in [0,1]
  long pairs_compared = 0;
  std::size_t rank = 0;  // 1 = most stable
};

// Per-meaning stability values with their rank order. Rows stay in dataset
// meaning order; ranked() lists meaning indices from most to least stable.
class StabilityTable {
 public:
  explicit StabilityTable(std::vector<StabilityRow> rows);

  std::size_t size() const { return rows_.size(); }
  const std::vector<StabilityRow>& rows() const { return rows_; }
  const StabilityRow& row(std::size_t meaning_index) const {
    return rows_[meaning_index];
  }
  const std::vector<std::size_t>& ranked() const { return ranked_; }

 private:
  std::vector<StabilityRow> rows_;
  std::vector<std::size_t> ranked_;
};

// S(i) = 1 - mean cell distance for meaning i over every language pair
// where both cells are present; the denominator is the number of such
// pairs. Throws InsufficientCoverageError if a meaning is present in fewer
// than two languages. Ranks are assigned by descending S, ties broken by
// ascending meaning identifier.
StabilityTable stability(const FamilyDataset& ds,
                         SynonymPolicy policy = SynonymPolicy::kFirst);

// Meaning identifiers from most to least stable.
std::vector<std::string> rank_meanings(const StabilityTable& t);

// Distance matrix restricted to the top_n most stable meanings. With
// top_n == M this is bit-identical to language_distance over all meanings.
DistanceMatrix truncated_distance(const FamilyDataset& ds, const StabilityTable& t,
                                  std::size_t top_n,
                                  SynonymPolicy policy = SynonymPolicy::kFirst);

// Pearson product-moment correlation over the upper-triangle entries of two
// matrices with identical labels. Exactly 1.0 when the entry vectors
// coincide. Throws DegenerateVarianceError if either entry set is constant.
double correlation(const DistanceMatrix& a, const DistanceMatrix& b);

// c(n) = correlation(D_n, D_M) for each n in the grid. Grid values must lie
// in [1, M]; c(M) is exactly 1.
std::vector<std::pair<std::size_t, double>> correlation_curve(
    const FamilyDataset& ds, const StabilityTable& t,
    std::span<const std::size_t> grid,
    SynonymPolicy policy = SynonymPolicy::kFirst);

// Default curve grid: 10, 20, ..., up to M, with M appended when it is not
// a multiple of 10.
std::vector<std::size_t> default_grid(std::size_t meaning_count);

}  // namespace lexiphy

#endif
