#ifndef LEXIPHY_REPORT_HPP
#define LEXIPHY_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "lexiphy/distance_matrix.hpp"
#include "lexiphy/lexstat.hpp"

namespace lexiphy {

// CSV emission for the command-line tool. All numbers are printed with a
// fixed six decimal places and rows follow a fixed order, so identical
// inputs give byte-identical output.

// RFC-4180 escaping: quote when the field contains a comma, quote or
// newline, doubling embedded quotes.
std::string csv_field(const std::string& s);

// Square matrix with a label header row and a label column.
std::string matrix_csv(const DistanceMatrix& m);
std::string matrix_csv(const TimeMatrix& m);

// meaning,S,pairs_compared,rank ordered by rank.
std::string stability_csv(const StabilityTable& t);

// n,c rows of a correlation curve.
std::string correlation_csv(const std::vector<std::pair<std::size_t, double>>& curve);

// n,rf rows of a Robinson-Foulds curve.
std::string rf_csv(const std::vector<std::pair<std::size_t, int>>& curve);

// meaning,rate rows of a simulator ground-truth sidecar.
std::string rates_csv(const std::vector<std::string>& meanings,
                      const std::vector<double>& rates);

}  // namespace lexiphy

#endif
