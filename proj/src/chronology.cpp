#include "lexiphy/chronology.hpp"

#include <cmath>
#include <stdexcept>

#include "lexiphy/errors.hpp"

namespace lexiphy {

TimeMatrix divergence_time(const DistanceMatrix& m, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a positive finite number");
  }
  const std::size_t n = m.size();
  std::vector<double> times;
  times.reserve(m.condensed().size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = m.at(i, j);
      if (d >= 1.0) {
        throw SaturatedDistanceError(m.labels()[i], m.labels()[j]);
      }
      times.push_back(-std::log1p(-d) / (2.0 * epsilon));
    }
  }
  return TimeMatrix(m.labels(), std::move(times));
}

double calibrate(const DistanceMatrix& m, const CalibrationPoint& p) {
  if (!(p.known_time > 0.0) || !std::isfinite(p.known_time)) {
    throw std::invalid_argument("calibration time must be positive and finite");
  }
  const std::size_t i = m.index_of(p.lang_a);
  const std::size_t j = m.index_of(p.lang_b);
  if (i == j) {
    throw std::invalid_argument("calibration pair must name two distinct languages");
  }
  const double d = m.at(i, j);
  if (d >= 1.0) {
    throw SaturatedDistanceError(p.lang_a, p.lang_b);
  }
  if (d == 0.0) {
    throw ZeroDistanceError("calibration pair \"" + p.lang_a + "\"/\"" + p.lang_b +
                            "\" has zero distance");
  }
  return -std::log1p(-d) / (2.0 * p.known_time);
}

}  // namespace lexiphy
