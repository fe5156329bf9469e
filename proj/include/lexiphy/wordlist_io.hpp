#ifndef LEXIPHY_WORDLIST_IO_HPP
#define LEXIPHY_WORDLIST_IO_HPP

#include <filesystem>
#include <istream>
#include <string>

#include "lexiphy/dataset.hpp"

namespace lexiphy {

// Reads the tab-separated wordlist format:
//
//   language<TAB>meaning1<TAB>meaning2...
//   Italian<TAB>uno<TAB>due|duo...
//
// The first header field must be the literal "language". A cell that is
// empty or "?" is a missing datum; otherwise it holds one or more forms
// separated by "|", each normalized on ingestion. Blank lines are skipped.
// Throws FormatError (with 1-based line and field numbers),
// DuplicateIdentifierError or EmptyDatasetError.
FamilyDataset parse_wordlist(std::istream& in);
FamilyDataset parse_wordlist(const std::filesystem::path& path);

// Inverse of parse_wordlist over normalized forms: missing cells become
// "?", synonym forms are joined with "|". Parsing the output reproduces
// the dataset exactly.
std::string write_wordlist(const FamilyDataset& ds);

}  // namespace lexiphy

#endif
