#include "cubicmaps/formatting.hpp"

#include <sstream>

#include <json.hpp>

namespace cubicmaps {

namespace {

std::string surface_token(bool orientable) { return orientable ? "orientable" : "nonorientable"; }

void markdown_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void markdown_rule(std::ostringstream& out, std::size_t columns) {
  out << '|';
  for (std::size_t i = 0; i < columns; ++i) out << "---|";
  out << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "markdown") return OutputFormat::kMarkdown;
  return std::nullopt;
}

std::optional<CountKind> parse_count_kind(std::string_view text) {
  if (text == "rooted") return CountKind::kRooted;
  if (text == "sensed") return CountKind::kSensed;
  if (text == "unsensed") return CountKind::kUnsensed;
  return std::nullopt;
}

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::kRooted:
      return "rooted";
    case CountKind::kSensed:
      return "sensed";
    case CountKind::kUnsensed:
      return "unsensed";
  }
  return "unknown";
}

std::string format_count(const SurfaceClass& surface, CountKind kind, const BigCount& value, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["surface"] = surface_token(surface.orientable);
    doc["genus"] = surface.genus;
    doc["kind"] = to_string(kind);
    doc["value"] = value.get_str();
    return doc.dump() + "\n";
  }
  return value.get_str() + "\n";
}

std::string format_census_table(bool orientable, const std::vector<CensusRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["g"] = r.genus;
        row["rooted"] = r.rooted.get_str();
        if (orientable) row["sensed"] = r.sensed ? r.sensed->get_str() : "";
        row["unsensed"] = r.unsensed.get_str();
        doc.push_back(std::move(row));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << (orientable ? "g,rooted,sensed,unsensed\n" : "g,rooted,unsensed\n");
      for (const auto& r : rows) {
        out << r.genus << ',' << r.rooted.get_str() << ',';
        if (orientable) out << (r.sensed ? r.sensed->get_str() : "") << ',';
        out << r.unsensed.get_str() << '\n';
      }
      break;
    case OutputFormat::kMarkdown: {
      const std::vector<std::string> header =
          orientable ? std::vector<std::string>{"g", "rooted", "sensed", "unsensed"}
                     : std::vector<std::string>{"g", "rooted", "unsensed"};
      markdown_row(out, header);
      markdown_rule(out, header.size());
      for (const auto& r : rows) {
        std::vector<std::string> cells{std::to_string(r.genus), r.rooted.get_str()};
        if (orientable) cells.push_back(r.sensed ? r.sensed->get_str() : "");
        cells.push_back(r.unsensed.get_str());
        markdown_row(out, cells);
      }
      break;
    }
  }
  return out.str();
}

std::string format_orbifolds(const std::vector<OrbifoldListing>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kJson: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& [g, s] : rows) {
        nlohmann::ordered_json row;
        row["g"] = g;
        row["l"] = s.period;
        row["genus"] = s.genus;
        row["ns"] = s.semiedge_points;
        row["nv"] = s.vertex_points;
        row["epsilon"] = s.epsilon.get_str();
        row["zero"] = !s.contributes();
        doc.push_back(std::move(row));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "g,l,genus,ns,nv,epsilon\n";
      for (const auto& [g, s] : rows) {
        out << g << ',' << s.period << ',' << s.genus << ',' << s.semiedge_points << ',' << s.vertex_points << ','
            << s.epsilon.get_str() << '\n';
      }
      break;
    case OutputFormat::kMarkdown: {
      bool any_zero = false;
      markdown_row(out, {"g", "l", "genus", "ns", "nv", "epsilon"});
      markdown_rule(out, 6);
      for (const auto& [g, s] : rows) {
        std::string epsilon = s.epsilon.get_str();
        if (!s.contributes()) {
          epsilon += " *";
          any_zero = true;
        }
        markdown_row(out, {std::to_string(g), std::to_string(s.period), std::to_string(s.genus),
                           std::to_string(s.semiedge_points), std::to_string(s.vertex_points), epsilon});
      }
      if (any_zero) out << "\n\\* zero coefficient: the orbifold contributes nothing to the census\n";
      break;
    }
  }
  return out.str();
}

}  // namespace cubicmaps
