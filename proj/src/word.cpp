#include "lexiphy/word.hpp"

#include "lexiphy/errors.hpp"

namespace lexiphy {
namespace unicode {

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char lead = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead >> 5) == 0x06) {
      cp = lead & 0x1f;
      extra = 1;
    } else if ((lead >> 4) == 0x0e) {
      cp = lead & 0x0f;
      extra = 2;
    } else if ((lead >> 3) == 0x1e) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + static_cast<std::size_t>(extra) >= n) {
      throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      const unsigned char cont = static_cast<unsigned char>(s[i + k]);
      if ((cont >> 6) != 0x02) {
        throw Utf8Error("invalid UTF-8 continuation byte at offset " +
                        std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3f);
    }
    static constexpr char32_t kMinForLength[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10ffff ||
        (cp >= 0xd800 && cp <= 0xdfff)) {
      throw Utf8Error("invalid code point at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
      out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
  }
  return out;
}

char32_t fold_case(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c < 0x80) return c;
  // Latin-1 supplement, skipping the multiplication sign
  if (c >= 0x00c0 && c <= 0x00de && c != 0x00d7) return c + 32;
  // Latin Extended-A pairs upper/lower codepoints
  if (c >= 0x0100 && c <= 0x0137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014a && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x0178) return 0x00ff;
  if (c >= 0x0179 && c <= 0x017e) return (c % 2 == 1) ? c + 1 : c;
  // Greek
  if (c >= 0x0391 && c <= 0x03ab && c != 0x03a2) return c + 32;
  // Cyrillic
  if (c >= 0x0400 && c <= 0x040f) return c + 80;
  if (c >= 0x0410 && c <= 0x042f) return c + 32;
  return c;
}

bool is_space(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00a0:  // no-break space
      return true;
    default:
      return false;
  }
}

}  // namespace unicode

Word Word::normalize(std::string_view raw) {
  std::u32string decoded = unicode::decode_utf8(raw);
  std::size_t begin = 0;
  std::size_t end = decoded.size();
  while (begin < end && unicode::is_space(decoded[begin])) ++begin;
  while (end > begin && unicode::is_space(decoded[end - 1])) --end;
  if (begin == end) {
    throw EmptyWordError("word form is empty or all whitespace");
  }
  std::u32string chars;
  chars.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    chars.push_back(unicode::fold_case(decoded[i]));
  }
  return Word(std::move(chars));
}

}  // namespace lexiphy
