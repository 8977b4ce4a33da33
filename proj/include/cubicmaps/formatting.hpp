// Text renderings of census tables and orbifold listings.
//
// Column orders are fixed: orientable tables g,rooted,sensed,unsensed;
// non-orientable tables g,rooted,unsensed; orbifolds g,l,genus,ns,nv,epsilon.
// Counts are written as decimal strings in JSON, never as floats.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicmaps/census.hpp"
#include "cubicmaps/orbifolds.hpp"

namespace cubicmaps {

enum class OutputFormat { kJson, kCsv, kMarkdown };

std::optional<OutputFormat> parse_output_format(std::string_view text);

enum class CountKind { kRooted, kSensed, kUnsensed };

std::optional<CountKind> parse_count_kind(std::string_view text);
std::string_view to_string(CountKind kind);

std::string format_count(const SurfaceClass& surface, CountKind kind, const BigCount& value, OutputFormat format);

std::string format_census_table(bool orientable, const std::vector<CensusRow>& rows, OutputFormat format);

struct OrbifoldListing {
  int genus = 0;  // covering surface genus
  SignatureSolution solution;
};

std::string format_orbifolds(const std::vector<OrbifoldListing>& rows, OutputFormat format);

}  // namespace cubicmaps
