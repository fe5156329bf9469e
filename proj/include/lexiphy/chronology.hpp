#ifndef LEXIPHY_CHRONOLOGY_HPP
#define LEXIPHY_CHRONOLOGY_HPP

#include <string>

#include "lexiphy/distance_matrix.hpp"

namespace lexiphy {

// A historically attested divergence time for one language pair, used to
// fix the decay rate epsilon.
struct CalibrationPoint {
  std::string lang_a;
  std::string lang_b;
  double known_time = 0.0;  // > 0, in the caller's time unit
};

// Maps lexical distances to divergence times, entry by entry:
//
//   T = -ln(1 - D) / (2 * epsilon)
//
// The map is strictly increasing in D, so the time matrix orders its
// entries exactly as the distance matrix does. With the default epsilon of
// 1 the times are dimensionless; calibrate() or a known rate gives them
// units. Throws SaturatedDistanceError if any entry equals 1 (infinite
// time).
TimeMatrix divergence_time(const DistanceMatrix& m, double epsilon = 1.0);

// Epsilon that makes divergence_time reproduce the calibration point
// exactly: epsilon = -ln(1 - D(pair)) / (2 * known_time). Throws
// ZeroDistanceError or SaturatedDistanceError when D(pair) is 0 or 1.
double calibrate(const DistanceMatrix& m, const CalibrationPoint& p);

}  // namespace lexiphy

#endif
