#include "lexiphy/wordlist_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "lexiphy/errors.hpp"

namespace lexiphy {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string strip_spaces(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

// Cell grammar: "" or "?" is missing, otherwise forms separated by "|".
Cell parse_cell(const std::string& raw, std::size_t line_no, std::size_t field_no) {
  const std::string text = strip_spaces(raw);
  if (text.empty() || text == "?") return {};
  Cell cell;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t bar = text.find('|', start);
    const std::string piece =
        bar == std::string::npos ? text.substr(start) : text.substr(start, bar - start);
    try {
      cell.push_back(Word::normalize(piece));
    } catch (const EmptyWordError&) {
      throw FormatError(line_no, field_no, "empty word form in cell \"" + text + "\"");
    } catch (const Utf8Error& e) {
      throw FormatError(line_no, field_no, e.what());
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return cell;
}

}  // namespace

FamilyDataset parse_wordlist(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // header
  std::vector<std::string> meanings;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip_spaces(line).empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (strip_spaces(fields[0]) != "language") {
      throw FormatError(line_no, 1, "header must start with the literal \"language\"");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const std::string id = strip_spaces(fields[f]);
      if (id.empty()) {
        throw FormatError(line_no, f + 1, "empty meaning identifier");
      }
      if (!seen.insert(id).second) {
        throw DuplicateIdentifierError("duplicate meaning identifier \"" + id +
                                       "\" (line " + std::to_string(line_no) + ")");
      }
      meanings.push_back(id);
    }
    break;
  }
  if (line_no == 0) throw EmptyDatasetError("input is empty");
  if (meanings.empty()) throw EmptyDatasetError("header has no meaning columns");

  const std::size_t m = meanings.size();
  std::vector<std::string> languages;
  std::vector<std::vector<Cell>> cells;
  std::unordered_set<std::string> seen_langs;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip_spaces(line).empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != m + 1) {
      throw FormatError(line_no, fields.size(),
                        "expected " + std::to_string(m + 1) + " fields, found " +
                            std::to_string(fields.size()));
    }
    const std::string lang = strip_spaces(fields[0]);
    if (lang.empty()) {
      throw FormatError(line_no, 1, "empty language identifier");
    }
    if (!seen_langs.insert(lang).second) {
      throw DuplicateIdentifierError("duplicate language identifier \"" + lang +
                                     "\" (line " + std::to_string(line_no) + ")");
    }
    std::vector<Cell> row;
    row.reserve(m);
    bool any_present = false;
    for (std::size_t f = 1; f <= m; ++f) {
      Cell c = parse_cell(fields[f], line_no, f + 1);
      any_present = any_present || !c.empty();
      row.push_back(std::move(c));
    }
    if (!any_present) {
      throw FormatError(line_no, 2, "language \"" + lang + "\" has no present cells");
    }
    languages.push_back(lang);
    cells.push_back(std::move(row));
  }
  if (languages.size() < 2) {
    throw EmptyDatasetError("a dataset needs at least two language rows");
  }
  return FamilyDataset(std::move(languages), std::move(meanings), std::move(cells));
}

FamilyDataset parse_wordlist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError(0, 0, "cannot open \"" + path.string() + "\"");
  }
  return parse_wordlist(in);
}

std::string write_wordlist(const FamilyDataset& ds) {
  std::ostringstream out;
  out << "language";
  for (const std::string& meaning : ds.meanings()) {
    out << '\t' << meaning;
  }
  out << '\n';
  for (std::size_t l = 0; l < ds.language_count(); ++l) {
    out << ds.languages()[l];
    for (std::size_t i = 0; i < ds.meaning_count(); ++i) {
      out << '\t';
      const Cell& c = ds.cell(l, i);
      if (c.empty()) {
        out << '?';
      } else {
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (k > 0) out << '|';
          out << c[k].utf8();
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lexiphy
