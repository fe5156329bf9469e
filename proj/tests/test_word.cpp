#include "doctest.h"
#include "lexiphy/errors.hpp"
#include "lexiphy/word.hpp"

using lexiphy::Word;

TEST_CASE("normalize trims and lowercases") {
  CHECK(Word::normalize("Three ").utf8() == "three");
  CHECK(Word::normalize("tres").utf8() == "tres");
  CHECK(Word::normalize("  NU  ").utf8() == "nu");
  CHECK(Word::normalize("\tto be\n").utf8() == "to be");
}

TEST_CASE("normalize rejects empty input") {
  CHECK_THROWS_AS(Word::normalize(""), lexiphy::EmptyWordError);
  CHECK_THROWS_AS(Word::normalize("   "), lexiphy::EmptyWordError);
  CHECK_THROWS_AS(Word::normalize(" \t\r\n"), lexiphy::EmptyWordError);
}

TEST_CASE("normalize rejects malformed utf-8") {
  CHECK_THROWS_AS(Word::normalize("\xff"), lexiphy::Utf8Error);
  CHECK_THROWS_AS(Word::normalize("a\xc3"), lexiphy::Utf8Error);      // truncated
  CHECK_THROWS_AS(Word::normalize("\xc0\xaf"), lexiphy::Utf8Error);   // overlong
  CHECK_THROWS_AS(Word::normalize("\xed\xa0\x80"), lexiphy::Utf8Error);  // surrogate
}

TEST_CASE("normalize is idempotent") {
  for (const char* raw : {"Three ", "HUND", "  Äpfel", "ΝΕΡΟ", "МИР", "a b"}) {
    const Word once = Word::normalize(raw);
    const Word twice = Word::normalize(once.utf8());
    CHECK(once == twice);
  }
}

TEST_CASE("case folding covers common non-ascii ranges") {
  CHECK(Word::normalize("Äpfel").utf8() == "äpfel");
  CHECK(Word::normalize("ŒUF").utf8() == "œuf");
  CHECK(Word::normalize("ΝΕΡΟ").utf8() == "νερο");
  CHECK(Word::normalize("МИР").utf8() == "мир");
  // unknown scripts pass through untouched
  CHECK(Word::normalize("水").utf8() == "水");
}

TEST_CASE("words count scalar values not bytes") {
  CHECK(Word::normalize("müde").size() == 4);
  CHECK(Word::normalize("νερό").size() == 4);
}
