#include "lexiphy/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lexiphy {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

namespace {

void check_shape(std::size_t n_labels, std::size_t n_entries) {
  if (n_labels < 2) {
    throw std::invalid_argument("matrix needs at least two labels");
  }
  if (n_entries != pair_count(n_labels)) {
    throw std::invalid_argument("entry count does not match label count");
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels,
                               std::vector<double> entries,
                               std::vector<long> support)
    : labels_(std::move(labels)),
      entries_(std::move(entries)),
      support_(std::move(support)) {
  check_shape(labels_.size(), entries_.size());
  if (support_.size() != entries_.size()) {
    throw std::invalid_argument("support count does not match entry count");
  }
  for (double v : entries_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("distance entries must lie in [0,1]");
    }
  }
  for (long s : support_) {
    if (s < 1) throw std::invalid_argument("every stored pair needs support >= 1");
  }
}

double DistanceMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return entries_[pair_index(i, j, labels_.size())];
}

long DistanceMatrix::support(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  return support_[pair_index(i, j, labels_.size())];
}

std::size_t DistanceMatrix::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("unknown language \"" + label + "\"");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

TimeMatrix::TimeMatrix(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  check_shape(labels_.size(), entries_.size());
  for (double v : entries_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("time entries must be finite and non-negative");
    }
  }
}

double TimeMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0.0;
  return entries_[pair_index(i, j, labels_.size())];
}

}  // namespace lexiphy
