#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsk/coset_enum.hpp"
#include "hsk/strip.hpp"

namespace hsk {

enum class GluingClass { Logarithmic, Linear, Bounded, Inconclusive };
const char* to_string(GluingClass c);

struct ProbePoint {
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::size_t diameter = 0;
  bool exact = true;
  bool connected = true;
};

struct ProbeOptions {
  std::size_t n_max = 10;
  std::size_t walk_cap = kDefaultWalkCap;
  std::size_t exact_cap = kExactDiameterCap;
  std::size_t max_cosets = kDefaultMaxCosets;
  /// Skip the square-group cross-reference (no enumeration).
  bool cross_reference = true;
};

struct ProbeReport {
  std::vector<ProbePoint> points;
  GluingClass classification = GluingClass::Inconclusive;
  double linear_residual = 0;  // squared residuals over the last points
  double log_residual = 0;
  double linear_slope = 0, linear_intercept = 0;
  double log_slope = 0, log_intercept = 0;
  bool truncated = false;  // walk cap lowered n_max
  std::size_t n_reached = 0;
  std::string expected;    // from the square group, when known
  std::vector<std::string> notes;
};

/// Decision rule on (n, diameter) data. Bounded when the diameters never
/// grow. Otherwise least-squares fits d = a n + b and d = c log2 n + e over
/// all points; their squared residuals over the largest five n decide,
/// with a factor 1.5 required between the two.
GluingClass classify_diameters(const std::vector<ProbePoint>& points, ProbeReport* fit = nullptr);

ProbeReport gluing_rate_probe(const Graph& g, const ProbeOptions& opt = {});

}  // namespace hsk
