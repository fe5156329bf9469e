#ifndef LEXIPHY_EDIT_DISTANCE_HPP
#define LEXIPHY_EDIT_DISTANCE_HPP

#include <cstddef>
#include <string_view>

#include "lexiphy/word.hpp"

namespace lexiphy {

// Minimum number of single-character insertions, deletions or
// substitutions transforming one sequence into the other. Unit costs.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(const Word& a, const Word& b);

// Edit distance divided by the length of the longer word. In [0,1];
// 0 iff the words are equal.
double normalized_distance(const Word& a, const Word& b);

}  // namespace lexiphy

#endif
