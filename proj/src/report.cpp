#include "lexiphy/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace lexiphy {

namespace {

std::string fixed6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

template <typename Matrix>
std::string square_csv(const Matrix& m) {
  std::string out = "language";
  for (const std::string& label : m.labels()) {
    out += ',';
    out += csv_field(label);
  }
  out += '\n';
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    out += csv_field(m.labels()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      out += ',';
      out += fixed6(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string matrix_csv(const DistanceMatrix& m) { return square_csv(m); }

std::string matrix_csv(const TimeMatrix& m) { return square_csv(m); }

std::string stability_csv(const StabilityTable& t) {
  std::string out = "meaning,S,pairs_compared,rank\n";
  for (std::size_t idx : t.ranked()) {
    const StabilityRow& row = t.row(idx);
    out += csv_field(row.meaning);
    out += ',';
    out += fixed6(row.value);
    out += ',';
    out += std::to_string(row.pairs_compared);
    out += ',';
    out += std::to_string(row.rank);
    out += '\n';
  }
  return out;
}

std::string correlation_csv(
    const std::vector<std::pair<std::size_t, double>>& curve) {
  std::string out = "n,c\n";
  for (const auto& [n, c] : curve) {
    out += std::to_string(n);
    out += ',';
    out += fixed6(c);
    out += '\n';
  }
  return out;
}

std::string rf_csv(const std::vector<std::pair<std::size_t, int>>& curve) {
  std::string out = "n,rf\n";
  for (const auto& [n, rf] : curve) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(rf);
    out += '\n';
  }
  return out;
}

std::string rates_csv(const std::vector<std::string>& meanings,
                      const std::vector<double>& rates) {
  if (meanings.size() != rates.size()) {
    throw std::invalid_argument("meanings and rates differ in length");
  }
  std::string out = "meaning,rate\n";
  for (std::size_t i = 0; i < meanings.size(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", rates[i]);
    out += csv_field(meanings[i]);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace lexiphy
