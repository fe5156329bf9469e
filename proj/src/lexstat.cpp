#include "lexiphy/lexstat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lexiphy/edit_distance.hpp"
#include "lexiphy/errors.hpp"

namespace lexiphy {

double cell_distance(const Cell& a, const Cell& b, SynonymPolicy policy) {
  switch (policy) {
    case SynonymPolicy::kFirst:
      return normalized_distance(a.front(), b.front());
    case SynonymPolicy::kMin: {
      double best = 1.0;
      for (const Word& wa : a) {
        for (const Word& wb : b) {
          best = std::min(best, normalized_distance(wa, wb));
        }
      }
      return best;
    }
  }
  throw std::logic_error("unreachable synonym policy");
}

namespace {

// Selected meaning indices, deduplicated and in ascending dataset order.
std::vector<std::size_t> canonical_selection(const FamilyDataset& ds,
                                             std::span<const std::size_t> meanings) {
  if (meanings.empty()) {
    throw std::invalid_argument("meaning selection is empty");
  }
  std::vector<std::size_t> sel(meanings.begin(), meanings.end());
  std::sort(sel.begin(), sel.end());
  sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
  if (sel.back() >= ds.meaning_count()) {
    throw std::invalid_argument("meaning index out of range");
  }
  return sel;
}

}  // namespace

DistanceMatrix language_distance(const FamilyDataset& ds, SynonymPolicy policy) {
  std::vector<std::size_t> all(ds.meaning_count());
  std::iota(all.begin(), all.end(), 0);
  return language_distance(ds, all, policy);
}

DistanceMatrix language_distance(const FamilyDataset& ds,
                                 std::span<const std::size_t> meanings,
                                 SynonymPolicy policy) {
  const std::vector<std::size_t> sel = canonical_selection(ds, meanings);
  const std::size_t n = ds.language_count();
  std::vector<double> entries;
  std::vector<long> support;
  entries.reserve(pair_count(n));
  support.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0;
      long count = 0;
      for (std::size_t m : sel) {
        if (ds.present(i, m) && ds.present(j, m)) {
          sum += cell_distance(ds.cell(i, m), ds.cell(j, m), policy);
          ++count;
        }
      }
      if (count == 0) {
        throw NoSharedMeaningsError(ds.languages()[i], ds.languages()[j]);
      }
      entries.push_back(sum / static_cast<double>(count));
      support.push_back(count);
    }
  }
  return DistanceMatrix(ds.languages(), std::move(entries), std::move(support));
}

StabilityTable::StabilityTable(std::vector<StabilityRow> rows) : rows_(std::move(rows)) {
  ranked_.resize(rows_.size());
  for (const StabilityRow& r : rows_) {
    if (r.rank < 1 || r.rank > rows_.size()) {
      throw std::invalid_argument("stability ranks must form a permutation of 1..M");
    }
    ranked_[r.rank - 1] = r.meaning_index;
  }
}

StabilityTable stability(const FamilyDataset& ds, SynonymPolicy policy) {
  const std::size_t n = ds.language_count();
  const std::size_t m = ds.meaning_count();
  std::vector<StabilityRow> rows(m);
  for (std::size_t k = 0; k < m; ++k) {
    double sum = 0.0;
    long count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ds.present(i, k)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!ds.present(j, k)) continue;
        sum += cell_distance(ds.cell(i, k), ds.cell(j, k), policy);
        ++count;
      }
    }
    if (count == 0) {
      throw InsufficientCoverageError(ds.meanings()[k]);
    }
    rows[k].meaning = ds.meanings()[k];
    rows[k].meaning_index = k;
    rows[k].value = 1.0 - sum / static_cast<double>(count);
    rows[k].pairs_compared = count;
  }

  // Descending S, ties by ascending meaning identifier.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&rows](std::size_t a, std::size_t b) {
    if (rows[a].value != rows[b].value) return rows[a].value > rows[b].value;
    return rows[a].meaning < rows[b].meaning;
  });
  for (std::size_t r = 0; r < m; ++r) {
    rows[order[r]].rank = r + 1;
  }
  return StabilityTable(std::move(rows));
}

std::vector<std::string> rank_meanings(const StabilityTable& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (std::size_t idx : t.ranked()) {
    out.push_back(t.row(idx).meaning);
  }
  return out;
}

DistanceMatrix truncated_distance(const FamilyDataset& ds, const StabilityTable& t,
                                  std::size_t top_n, SynonymPolicy policy) {
  if (top_n < 1 || top_n > t.size()) {
    throw std::invalid_argument("top_n must lie in [1, M]");
  }
  if (t.size() != ds.meaning_count()) {
    throw std::invalid_argument("stability table does not match dataset");
  }
  std::vector<std::size_t> sel(t.ranked().begin(),
                               t.ranked().begin() + static_cast<std::ptrdiff_t>(top_n));
  return language_distance(ds, sel, policy);
}

double correlation(const DistanceMatrix& a, const DistanceMatrix& b) {
  if (a.labels() != b.labels()) {
    throw std::invalid_argument("correlation requires identical label sets");
  }
  const std::vector<double>& x = a.condensed();
  const std::vector<double>& y = b.condensed();
  const std::size_t n = x.size();

  auto constant = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&v](double e) { return e == v.front(); });
  };
  if (constant(x) || constant(y)) {
    throw DegenerateVarianceError("correlation of a constant entry set is undefined");
  }
  // Complete coincidence is exactly 1 by definition; the closed form would
  // only reproduce that up to rounding.
  if (x == y) return 1.0;

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<std::pair<std::size_t, double>> correlation_curve(
    const FamilyDataset& ds, const StabilityTable& t,
    std::span<const std::size_t> grid, SynonymPolicy policy) {
  const std::size_t m = ds.meaning_count();
  for (std::size_t n : grid) {
    if (n < 1 || n > m) {
      throw std::invalid_argument("grid values must lie in [1, M]");
    }
  }
  const DistanceMatrix full = truncated_distance(ds, t, m, policy);
  std::vector<std::pair<std::size_t, double>> curve;
  curve.reserve(grid.size());
  for (std::size_t n : grid) {
    const DistanceMatrix truncated = truncated_distance(ds, t, n, policy);
    curve.emplace_back(n, correlation(truncated, full));
  }
  return curve;
}

std::vector<std::size_t> default_grid(std::size_t meaning_count) {
  std::vector<std::size_t> grid;
  for (std::size_t n = 10; n <= meaning_count; n += 10) {
    grid.push_back(n);
  }
  if (grid.empty() || grid.back() != meaning_count) {
    grid.push_back(meaning_count);
  }
  return grid;
}

}  // namespace lexiphy
