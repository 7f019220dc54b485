#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hsk/analysis.hpp"
#include "hsk/cover.hpp"
#include "hsk/pattern.hpp"
#include "hsk/probe.hpp"
#include "hsk/realization.hpp"

namespace hsk {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [[u, v], ...]}. Parallel edges collapse;
/// their number is stored in *collapsed.
Graph parse_graph(std::string_view text, std::size_t* collapsed = nullptr);
Graph graph_from_json(const Json& j, std::size_t* collapsed = nullptr);
std::string write_graph(const Graph& g);

/// A graph file for the total graph plus "projection" (total vertex name to
/// base vertex name) and "provenance"; truncated covers also carry
/// "radius" and "depth".
Cover parse_cover(std::string_view text, const Graph& base);
std::string write_cover(const Cover& c);

/// {"width": w, "height": h, "cells": [row-major vertex names]}.
Pattern parse_pattern(std::string_view text, const Graph& g);
std::string write_pattern(const Pattern& p, const Graph& g);

/// Undirected DOT; `fiber` (one base index per vertex) colors vertices.
std::string to_dot(const Graph& g, const std::vector<VertexId>* fiber = nullptr);

Json to_json(const AnalysisReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const RealizationCounts& c, const Graph& g);
std::string format_probe_table(const ProbeReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hsk
