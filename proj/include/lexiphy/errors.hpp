#ifndef LEXIPHY_ERRORS_HPP
#define LEXIPHY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexiphy {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// normalize() received an empty or all-whitespace string.
class EmptyWordError : public Error {
 public:
  using Error::Error;
};

// Malformed UTF-8 in an input string.
class Utf8Error : public Error {
 public:
  using Error::Error;
};

// Two languages share no present meaning within the current selection.
class NoSharedMeaningsError : public Error {
 public:
  NoSharedMeaningsError(std::string lang_a, std::string lang_b)
      : Error("languages \"" + lang_a + "\" and \"" + lang_b +
              "\" share no present meaning"),
        lang_a_(std::move(lang_a)),
        lang_b_(std::move(lang_b)) {}
  const std::string& lang_a() const { return lang_a_; }
  const std::string& lang_b() const { return lang_b_; }

 private:
  std::string lang_a_;
  std::string lang_b_;
};

// A meaning is present in fewer than two languages, so no pair can be
// compared for it.
class InsufficientCoverageError : public Error {
 public:
  explicit InsufficientCoverageError(std::string meaning)
      : Error("meaning \"" + meaning + "\" is present in fewer than two languages"),
        meaning_(std::move(meaning)) {}
  const std::string& meaning() const { return meaning_; }

 private:
  std::string meaning_;
};

// Correlation of a constant entry set is undefined.
class DegenerateVarianceError : public Error {
 public:
  using Error::Error;
};

// A lexical distance of exactly 1 maps to an infinite divergence time.
class SaturatedDistanceError : public Error {
 public:
  SaturatedDistanceError(const std::string& lang_a, const std::string& lang_b)
      : Error("distance between \"" + lang_a + "\" and \"" + lang_b +
              "\" is saturated (1.0), divergence time is infinite") {}
};

// Calibration against a zero distance cannot determine a rate.
class ZeroDistanceError : public Error {
 public:
  using Error::Error;
};

// Grammar violation in a wordlist file; line and column are 1-based, the
// column counts tab-separated fields.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", field " + std::to_string(column) +
              ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Repeated language or meaning identifier.
class DuplicateIdentifierError : public Error {
 public:
  using Error::Error;
};

// Fewer than two languages or no meaning columns at all.
class EmptyDatasetError : public Error {
 public:
  using Error::Error;
};

// FamilyDataset invariant violated at construction.
class DatasetError : public Error {
 public:
  using Error::Error;
};

// Malformed Newick input; position is a 0-based character offset.
class NewickParseError : public Error {
 public:
  NewickParseError(std::size_t position, const std::string& message)
      : Error("newick: offset " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A leaf label appears more than once in a tree.
class DuplicateLeafError : public Error {
 public:
  using Error::Error;
};

// Two trees compared over different leaf-label sets.
class LeafSetMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexiphy

#endif
