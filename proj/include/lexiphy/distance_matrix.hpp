#ifndef LEXIPHY_DISTANCE_MATRIX_HPP
#define LEXIPHY_DISTANCE_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace lexiphy {

// Upper-triangle pair order used by both matrix types and by every
// operation that iterates entries: (0,1),(0,2),...,(0,n-1),(1,2),...
// Keeping one canonical order makes floating-point results reproducible.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Symmetric matrix of lexical distances in [0,1] with zero diagonal.
// support(i,j) counts the meanings actually compared for that pair.
class DistanceMatrix {
 public:
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries,
                 std::vector<long> support);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(std::size_t i, std::size_t j) const;
  long support(std::size_t i, std::size_t j) const;

  // Upper triangle in canonical pair order.
  const std::vector<double>& condensed() const { return entries_; }
  const std::vector<long>& support_counts() const { return support_; }

  // Index of a label; throws std::invalid_argument if absent.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
  std::vector<long> support_;
};

// Symmetric matrix of divergence times: finite, non-negative, zero diagonal.
class TimeMatrix {
 public:
  TimeMatrix(std::vector<std::string> labels, std::vector<double> entries);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  double at(std::size_t i, std::size_t j) const;
  const std::vector<double>& condensed() const { return entries_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

}  // namespace lexiphy

#endif
