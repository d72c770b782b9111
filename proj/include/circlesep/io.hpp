#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "circlesep/dynamics.hpp"
#include "circlesep/geom.hpp"
#include "circlesep/voronoi.hpp"

namespace circlesep {

using Json = nlohmann::ordered_json;

/// {"dots":[{"u":"3/7","v":"-1/2"}, ...]}
Json config_to_json(const DotConfig& config);
/// Strict: unknown keys, non-string or non-canonical rationals throw Error(Parse).
DotConfig config_from_json(const Json& doc);

/// Errors while reading or writing are Error(Io); malformed JSON is Error(Parse).
DotConfig read_config(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Pretty-printed, with a trailing newline.
std::string dump(const Json& doc);

/// Dot indices are 1-based in every exported artifact.
Json dot_set_json(DotSet s);
std::string dot_set_label(DotSet s);

/// Side-count and avoidant histograms with their closed-form comparison.
/// Throws Error(NotGeneralPosition) for uncertified input.
Json counts_report(const DotConfig& config);
bool report_formula_match(const Json& report);

Json counts_json(const StrataCounts& c);

/// Full key listing plus counts, formula comparison, antipodal check (n = 2k)
/// and gluing check (k >= 2). Circumcenters are floating point, for layout.
Json graph_to_json(const DotConfig& config, const VoronoiGraph& graph);
std::string graph_to_dot(const VoronoiGraph& graph);
/// Stereographic drawing of the decomposition. Presentation only.
std::string graph_to_svg(const DotConfig& config, const VoronoiGraph& graph);

Json move_log_to_json(const MoveLog& log, int n, int k);

}  // namespace circlesep
