#ifndef LEXIPHY_NEWICK_HPP
#define LEXIPHY_NEWICK_HPP

#include <string>
#include <string_view>

#include "lexiphy/tree.hpp"

namespace lexiphy {

// Newick text with branch lengths, ";"-terminated. Children are ordered by
// their smallest descendant leaf label, and lengths are printed with up to
// 12 significant digits, so equal trees serialize to identical bytes.
// Labels needing it are single-quoted per Newick convention.
std::string newick_serialize(const Tree& t);

// Parses a rooted binary Newick tree. Omitted branch lengths default to 0;
// internal node labels are accepted and discarded; quoted labels ('...',
// with '' as the escape) are supported; an unquoted underscore is kept
// literal. Throws NewickParseError with the offending offset, or
// DuplicateLeafError.
Tree newick_parse(std::string_view text);

}  // namespace lexiphy

#endif
