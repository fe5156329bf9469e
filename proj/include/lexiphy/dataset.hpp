#ifndef LEXIPHY_DATASET_HPP
#define LEXIPHY_DATASET_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lexiphy/word.hpp"

namespace lexiphy {

// How a multi-form cell pair is compared: by the first-listed forms, or by
// the minimum distance over the cross product of forms.
enum class SynonymPolicy { kFirst, kMin };

// One cell of the wordlist table. An empty vector means the datum is
// missing; a present cell holds one or more synonym forms.
using Cell = std::vector<Word>;

// Immutable N-languages x M-meanings table of word forms.
//
// Invariants, enforced at construction: at least two languages, at least
// one meaning, identifiers unique, every language has at least one present
// cell. All accessors are const; instances are safe to share across threads.
class FamilyDataset {
 public:
  // cells are indexed [language][meaning]. Throws EmptyDatasetError,
  // DuplicateIdentifierError or DatasetError on invariant violations.
  FamilyDataset(std::vector<std::string> languages,
                std::vector<std::string> meanings,
                std::vector<std::vector<Cell>> cells);

  std::size_t language_count() const { return languages_.size(); }
  std::size_t meaning_count() const { return meanings_.size(); }
  const std::vector<std::string>& languages() const { return languages_; }
  const std::vector<std::string>& meanings() const { return meanings_; }

  const Cell& cell(std::size_t language, std::size_t meaning) const {
    return cells_[language][meaning];
  }
  bool present(std::size_t language, std::size_t meaning) const {
    return !cells_[language][meaning].empty();
  }

  bool operator==(const FamilyDataset&) const = default;

 private:
  std::vector<std::string> languages_;
  std::vector<std::string> meanings_;
  std::vector<std::vector<Cell>> cells_;
};

}  // namespace lexiphy

#endif
