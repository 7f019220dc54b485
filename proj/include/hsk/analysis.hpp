#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsk/cover.hpp"
#include "hsk/probe.hpp"
#include "hsk/square_group.hpp"

namespace hsk {

struct AnalysisOptions {
  VertexId tree_root = 0;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t radius = 4;          // truncated square cover when infinite/unknown
  std::size_t rewrite_depth = 64;
  bool build_cover = true;
};

struct AnalysisReport {
  bool connected = true;
  bool bipartite = false;
  FundamentalClass fundamental;
  std::size_t squares = 0;
  Presentation square_group;  // simplified
  EnumerationOutcome outcome;
  AbelianInvariants abelian;
  std::optional<InfinitenessCertificate> infinite;
  std::optional<std::size_t> cover_vertices;
  bool cover_exact = false;
  std::string cover_note;
  GluingClass predicted = GluingClass::Inconclusive;
  bool mixing = false;
  std::vector<std::string> warnings;
};

/// Full pipeline on a connected graph; throws ValidationError otherwise.
AnalysisReport analyze(const Graph& g, const AnalysisOptions& opt = {});
std::string format_report(const AnalysisReport& r);

}  // namespace hsk
