#include "hsk/probe.hpp"

#include <algorithm>
#include <cmath>

#include "hsk/square_group.hpp"

namespace hsk {

const char* to_string(GluingClass c) {
  switch (c) {
    case GluingClass::Logarithmic: return "Logarithmic";
    case GluingClass::Linear: return "Linear";
    case GluingClass::Bounded: return "Bounded";
    case GluingClass::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

struct Fit {
  double slope = 0;
  double intercept = 0;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-12) return {0, sy / n};
  Fit f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

}  // namespace

GluingClass classify_diameters(const std::vector<ProbePoint>& points, ProbeReport* fit) {
  if (points.empty()) return GluingClass::Inconclusive;
  auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                      [](const ProbePoint& a, const ProbePoint& b) { return a.diameter < b.diameter; });
  if (lo->diameter == hi->diameter) return GluingClass::Bounded;
  if (points.size() < 3) return GluingClass::Inconclusive;

  std::vector<double> n, logn, d;
  for (const auto& p : points) {
    n.push_back(static_cast<double>(p.n));
    logn.push_back(std::log2(static_cast<double>(std::max<std::size_t>(p.n, 1))));
    d.push_back(static_cast<double>(p.diameter));
  }
  Fit lin = least_squares(n, d);
  Fit lg = least_squares(logn, d);
  double lin_res = 0, log_res = 0;
  const std::size_t tail = std::min<std::size_t>(5, points.size());
  for (std::size_t i = points.size() - tail; i < points.size(); ++i) {
    double a = d[i] - (lin.slope * n[i] + lin.intercept);
    double b = d[i] - (lg.slope * logn[i] + lg.intercept);
    lin_res += a * a;
    log_res += b * b;
  }
  if (fit != nullptr) {
    fit->linear_slope = lin.slope;
    fit->linear_intercept = lin.intercept;
    fit->log_slope = lg.slope;
    fit->log_intercept = lg.intercept;
    fit->linear_residual = lin_res;
    fit->log_residual = log_res;
  }
  if (log_res > 1.5 * lin_res) return GluingClass::Linear;
  if (lin_res > 1.5 * log_res) return GluingClass::Logarithmic;
  return GluingClass::Inconclusive;
}

ProbeReport gluing_rate_probe(const Graph& g, const ProbeOptions& opt) {
  if (!is_connected(g)) throw ValidationError("probe needs a connected graph");
  ProbeReport rep;
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    std::optional<StripGraph> s;
    try {
      s = StripGraph::build(g, n, opt.walk_cap);
    } catch (const BudgetExceeded& e) {
      rep.truncated = true;
      rep.notes.push_back(std::string("n_max reduced to ") + std::to_string(n - 1) + ": " + e.what());
      break;
    }
    auto d = diameter(s->adjacency(), DiameterMode::Auto, opt.exact_cap);
    rep.points.push_back({n, s->vertex_count(), d.value, d.exact, d.connected});
    rep.n_reached = n;
  }
  rep.classification = classify_diameters(rep.points, &rep);

  if (is_bipartite(g).bipartite) {
    rep.notes.push_back("bipartite base: strip graphs can only glue in phase (phased only)");
  }
  if (std::any_of(rep.points.begin(), rep.points.end(), [](const ProbePoint& p) { return !p.connected; })) {
    rep.notes.push_back("some strip graphs are disconnected; diameters are taken per component");
  }
  if (std::any_of(rep.points.begin(), rep.points.end(), [](const ProbePoint& p) { return !p.exact; })) {
    rep.notes.push_back("some diameters are heuristic lower bounds");
  }
  if (opt.cross_reference) {
    SquareGroup sg = compute_square_group(g, 0, opt.max_cosets);
    bool expect_fast = false, expect_linear = false;
    if (auto* f = std::get_if<Finite>(&sg.outcome)) {
      rep.expected = "Logarithmic or Bounded (square group of order " + std::to_string(f->order) + ")";
      expect_fast = true;
    } else if (auto cert = certify_infinite(sg.simplified.presentation)) {
      rep.expected = "Linear (square group infinite: " + cert->detail + ")";
      expect_linear = true;
    } else {
      rep.expected = "unknown (square group undecided)";
    }
    const auto c = rep.classification;
    if ((expect_fast && (c == GluingClass::Linear)) ||
        (expect_linear && (c == GluingClass::Logarithmic || c == GluingClass::Bounded))) {
      rep.notes.push_back("classification disagrees with the square group; more data points may be needed");
    }
  }
  return rep;
}

}  // namespace hsk
