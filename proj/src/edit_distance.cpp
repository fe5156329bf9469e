#include "lexiphy/edit_distance.hpp"

#include <algorithm>
#include <vector>

namespace lexiphy {

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);  // keep the rows short
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (m == 0) return n;

  // Two-row dynamic programming over the (n+1) x (m+1) edit table.
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t levenshtein(const Word& a, const Word& b) {
  return levenshtein(std::u32string_view(a.chars()), std::u32string_view(b.chars()));
}

double normalized_distance(const Word& a, const Word& b) {
  const std::size_t longer = std::max(a.size(), b.size());
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longer);
}

}  // namespace lexiphy
