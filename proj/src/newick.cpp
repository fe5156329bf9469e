#include "lexiphy/newick.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "lexiphy/errors.hpp"

namespace lexiphy {

namespace {

const char kStructural[] = "(),:;";

bool needs_quoting(const std::string& label) {
  for (char c : label) {
    if (std::strchr(kStructural, c) || c == '\'' || c == '[' || c == ']' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return true;
    }
  }
  return label.empty();
}

void append_label(std::string& out, const std::string& label) {
  if (!needs_quoting(label)) {
    out += label;
    return;
  }
  out += '\'';
  for (char c : label) {
    if (c == '\'') out += "''";
    else out += c;
  }
  out += '\'';
}

void append_length(std::string& out, double length) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", length);
  out += buf;
}

void serialize_node(const Tree& t, int id, bool at_root, std::string& out) {
  const Tree::Node& nd = t.node(id);
  if (nd.is_leaf()) {
    append_label(out, nd.label);
  } else {
    int first = nd.left;
    int second = nd.right;
    if (t.min_labels()[static_cast<std::size_t>(second)] <
        t.min_labels()[static_cast<std::size_t>(first)]) {
      std::swap(first, second);
    }
    out += '(';
    serialize_node(t, first, false, out);
    out += ',';
    serialize_node(t, second, false, out);
    out += ')';
  }
  if (!at_root) {
    out += ':';
    append_length(out, nd.length);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Tree parse() {
    const int root = parse_subtree();
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing characters after \";\"");
    }
    return Tree::build(std::move(nodes_), root);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw NewickParseError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  int parse_subtree() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      const int left = parse_subtree();
      skip_space();
      expect(',');
      const int right = parse_subtree();
      skip_space();
      if (peek() == ',') {
        fail("internal nodes must have exactly two children");
      }
      expect(')');
      skip_space();
      // tolerate and discard an internal node label
      if (peek() != '\0' && peek() != ':' && peek() != ',' && peek() != ')' &&
          peek() != ';') {
        parse_label();
      }
      const int id = static_cast<int>(nodes_.size());
      Tree::Node nd;
      nd.left = left;
      nd.right = right;
      nd.length = parse_optional_length();
      nodes_.push_back(std::move(nd));
      return id;
    }
    std::string label = parse_label();
    if (label.empty()) {
      fail("expected a leaf label or '('");
    }
    const int id = static_cast<int>(nodes_.size());
    Tree::Node nd;
    nd.label = std::move(label);
    nd.length = parse_optional_length();
    nodes_.push_back(std::move(nd));
    return id;
  }

  std::string parse_label() {
    skip_space();
    std::string label;
    if (peek() == '\'') {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) fail("unterminated quoted label");
        const char c = text_[pos_++];
        if (c == '\'') {
          if (peek() == '\'') {
            label += '\'';
            ++pos_;
          } else {
            break;
          }
        } else {
          label += c;
        }
      }
      return label;
    }
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::strchr(kStructural, c) || c == '\'' || c == '[' || c == ']' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      label += c;
      ++pos_;
    }
    return label;
  }

  double parse_optional_length() {
    skip_space();
    if (peek() != ':') return 0.0;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
          c == '.' || c == 'e' || c == 'E') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a branch length after ':'");
    const std::string token(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      throw NewickParseError(start, "malformed branch length \"" + token + "\"");
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Tree::Node> nodes_;
};

}  // namespace

std::string newick_serialize(const Tree& t) {
  std::string out;
  serialize_node(t, t.root(), true, out);
  out += ';';
  return out;
}

Tree newick_parse(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace lexiphy
