#include "lexiphy/dataset.hpp"

#include <unordered_set>

#include "lexiphy/errors.hpp"

namespace lexiphy {

namespace {

void check_unique(const std::vector<std::string>& ids, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw DuplicateIdentifierError(std::string("duplicate ") + kind +
                                     " identifier \"" + id + "\"");
    }
  }
}

}  // namespace

FamilyDataset::FamilyDataset(std::vector<std::string> languages,
                             std::vector<std::string> meanings,
                             std::vector<std::vector<Cell>> cells)
    : languages_(std::move(languages)),
      meanings_(std::move(meanings)),
      cells_(std::move(cells)) {
  if (languages_.size() < 2) {
    throw EmptyDatasetError("a dataset needs at least two languages");
  }
  if (meanings_.empty()) {
    throw EmptyDatasetError("a dataset needs at least one meaning");
  }
  check_unique(languages_, "language");
  check_unique(meanings_, "meaning");
  if (cells_.size() != languages_.size()) {
    throw DatasetError("cell table has wrong number of language rows");
  }
  for (std::size_t l = 0; l < cells_.size(); ++l) {
    if (cells_[l].size() != meanings_.size()) {
      throw DatasetError("language \"" + languages_[l] +
                         "\" has wrong number of meaning cells");
    }
    bool any_present = false;
    for (const Cell& c : cells_[l]) {
      if (!c.empty()) {
        any_present = true;
        break;
      }
    }
    if (!any_present) {
      throw DatasetError("language \"" + languages_[l] + "\" has no present cells");
    }
  }
}

}  // namespace lexiphy
