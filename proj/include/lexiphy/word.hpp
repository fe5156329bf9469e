#ifndef LEXIPHY_WORD_HPP
#define LEXIPHY_WORD_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace lexiphy {

namespace unicode {

// Decodes UTF-8 into Unicode scalar values. Throws Utf8Error on malformed,
// overlong, surrogate or out-of-range sequences.
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(std::u32string_view s);

// Simple one-to-one lowercase fold covering ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic. Other scripts pass through unchanged.
char32_t fold_case(char32_t c);

bool is_space(char32_t c);

}  // namespace unicode

// A word form ready for comparison: lowercased, trimmed at both ends,
// never empty. Characters are Unicode scalar values, so edit operations
// count code points rather than UTF-8 bytes. Transliteration digraphs
// ("sh", "ch") are therefore two characters each.
class Word {
 public:
  // Canonicalizes a raw string. Throws EmptyWordError when nothing but
  // whitespace remains, Utf8Error on bad encoding. Idempotent: normalizing
  // the utf8() of a Word reproduces it exactly.
  static Word normalize(std::string_view raw);

  const std::u32string& chars() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  std::string utf8() const { return unicode::encode_utf8(chars_); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  explicit Word(std::u32string chars) : chars_(std::move(chars)) {}
  std::u32string chars_;
};

}  // namespace lexiphy

#endif
