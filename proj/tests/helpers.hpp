#ifndef LEXIPHY_TESTS_HELPERS_HPP
#define LEXIPHY_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "lexiphy/dataset.hpp"

namespace testutil {

// Builds a dataset from readable cell strings: "" or "?" is missing,
// "a|b" lists synonym forms.
inline lexiphy::FamilyDataset make_dataset(
    std::vector<std::string> languages, std::vector<std::string> meanings,
    const std::vector<std::vector<std::string>>& cell_text) {
  std::vector<std::vector<lexiphy::Cell>> cells;
  cells.reserve(cell_text.size());
  for (const auto& row : cell_text) {
    std::vector<lexiphy::Cell> out_row;
    out_row.reserve(row.size());
    for (const std::string& text : row) {
      lexiphy::Cell cell;
      if (!text.empty() && text != "?") {
        std::size_t start = 0;
        while (start <= text.size()) {
          const std::size_t bar = text.find('|', start);
          const std::string piece = bar == std::string::npos
                                        ? text.substr(start)
                                        : text.substr(start, bar - start);
          cell.push_back(lexiphy::Word::normalize(piece));
          if (bar == std::string::npos) break;
          start = bar + 1;
        }
      }
      out_row.push_back(std::move(cell));
    }
    cells.push_back(std::move(out_row));
  }
  return lexiphy::FamilyDataset(std::move(languages), std::move(meanings),
                                std::move(cells));
}

}  // namespace testutil

#endif
