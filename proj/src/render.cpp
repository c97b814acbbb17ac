#include "sarkisov/render.hpp"

#include <algorithm>
#include <array>

#include <fmt/core.h>
#include <json.hpp>

#include "sarkisov/catalog.hpp"

namespace sarkisov {
namespace {

using Json = nlohmann::ordered_json;

std::string flags_string(const Annotations& a) {
  std::string out;
  for (Flag f : a.flags) {
    if (!out.empty()) out += ' ';
    out += to_string(f);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i)
      line += fmt::format("{:<{}}", row[i], i + 1 < row.size() ? width[i] + 2 : 0);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

Json side_json(const ContractionSpec& s) {
  Json j;
  j["type"] = std::string(to_string(s.type));
  j["target"] = s.target_name();
  j["data"] = s.data_string();
  return j;
}

Json link_json(std::size_t row, const NumericalLink& l) {
  Json j;
  j["row"] = row;
  j["genus"] = l.genus;
  j["types"] = l.types();
  j["left"] = side_json(l.left);
  j["right"] = side_json(l.right);
  j["e"] = l.e;
  j["x"] = l.coordinates.x;
  j["y"] = l.coordinates.y;
  j["verdict"] = std::string(to_string(l.annotations.verdict));
  Json flags = Json::array();
  for (Flag f : l.annotations.flags) flags.push_back(std::string(to_string(f)));
  j["flags"] = flags;
  j["note"] = l.annotations.note;
  return j;
}

std::string family_list(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text_table: return "text-table";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text-table";
}

std::optional<OutputFormat> parse_output_format(std::string_view s) {
  for (OutputFormat f : {OutputFormat::text_table, OutputFormat::json, OutputFormat::csv})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

std::string format_class(DivisorClass c) {
  auto term = [](std::int64_t k, std::string_view sym) -> std::string {
    if (k == 1) return std::string(sym);
    if (k == -1) return "-" + std::string(sym);
    return std::to_string(k) + std::string(sym);
  };
  if (c.x == 0 && c.y == 0) return "0";
  if (c.y == 0) return term(c.x, "A");
  if (c.x == 0) return term(-c.y, "E~");
  const std::string e = c.y == 1 || c.y == -1 ? "E~" : std::to_string(c.y < 0 ? -c.y : c.y) + "E~";
  return term(c.x, "A") + (c.y > 0 ? " - " : " + ") + e;
}

std::string render_links(const std::vector<NumericalLink>& links, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (std::size_t i = 0; i < links.size(); ++i) arr.push_back(link_json(i + 1, links[i]));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out = csv_line({"row", "genus", "types", "left_target", "left_data",
                                  "right_target", "right_data", "e", "x", "y", "R", "flags"});
      for (std::size_t i = 0; i < links.size(); ++i) {
        const NumericalLink& l = links[i];
        out += csv_line({std::to_string(i + 1), std::to_string(l.genus), l.types(),
                         l.left.target_name(), l.left.data_string(), l.right.target_name(),
                         l.right.data_string(), std::to_string(l.e),
                         std::to_string(l.coordinates.x), std::to_string(l.coordinates.y),
                         std::string(to_string(l.annotations.verdict)),
                         flags_string(l.annotations)});
      }
      return out;
    }
    case OutputFormat::text_table: {
      std::vector<std::vector<std::string>> rows{
          {"row", "types", "left", "centre", "right", "centre/aux", "e", "R", "flags"}};
      for (std::size_t i = 0; i < links.size(); ++i) {
        const NumericalLink& l = links[i];
        rows.push_back({std::to_string(i + 1), l.types(), l.left.target_name(),
                        l.left.data_string(), l.right.target_name(), l.right.data_string(),
                        std::to_string(l.e), std::string(to_string(l.annotations.verdict)),
                        flags_string(l.annotations)});
      }
      return text_table(rows);
    }
  }
  return {};
}

std::string render_catalog(OutputFormat format) {
  auto genus = [](const FanoFamily& f) { return f.genus ? std::to_string(*f.genus) : ""; };
  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const FanoFamily& f : all_families()) {
        Json j;
        j["name"] = f.canonical_name;
        j["aliases"] = f.aliases;
        j["index"] = f.fano_index;
        j["h_cubed"] = f.h_cubed;
        j["a_cubed"] = f.a_cubed;
        j["genus"] = f.genus ? Json(*f.genus) : Json(nullptr);
        arr.push_back(j);
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::string out = csv_line({"name", "aliases", "index", "h_cubed", "a_cubed", "genus"});
      for (const FanoFamily& f : all_families())
        out += csv_line({f.canonical_name, family_list(f.aliases), std::to_string(f.fano_index),
                         std::to_string(f.h_cubed), std::to_string(f.a_cubed), genus(f)});
      return out;
    }
    case OutputFormat::text_table: {
      std::vector<std::vector<std::string>> rows{{"name", "aliases", "index", "H^3", "A^3", "genus"}};
      for (const FanoFamily& f : all_families())
        rows.push_back({f.canonical_name, family_list(f.aliases), std::to_string(f.fano_index),
                        std::to_string(f.h_cubed), std::to_string(f.a_cubed), genus(f)});
      return text_table(rows);
    }
  }
  return {};
}

std::string render_diff(const DiffReport& report) {
  std::string out;
  auto row_line = [](const ReferenceRow& r) {
    return fmt::format("  {}: {}-{} {} {} -> {} {}, e={}\n", r.label(), r.left_type, r.right_type,
                       r.left_target, r.left_centre, r.right_target, r.right_data, r.e);
  };
  out += fmt::format("matched: {}\n", report.matched.size());
  out += fmt::format("matched after erratum: {}\n", report.matched_with_erratum.size());
  for (const RowMatch& m : report.matched_with_erratum)
    out += fmt::format("  {}: {} printed {}, read as {} ({})\n", m.row.label(), m.erratum->field,
                       m.erratum->printed, m.erratum->corrected, m.erratum->reason);
  out += fmt::format("missing: {}\n", report.missing.size());
  for (const ReferenceRow& r : report.missing) out += row_line(r);
  out += fmt::format("anomalies (not gated): {}\n", report.missing_anomalies.size());
  for (const ReferenceRow& r : report.missing_anomalies) out += row_line(r);
  out += fmt::format("unlisted: {}\n", report.unlisted.size());
  for (const NumericalLink& l : report.unlisted) out += fmt::format("  {} e={}\n", l.key(), l.e);
  out += fmt::format("annotation mismatches: {}\n", report.annotation_mismatches.size());
  for (const RowMatch& m : report.annotation_mismatches)
    for (const NumericalLink& l : m.links)
      out += fmt::format("  {}: R={} flags=[{}]\n", m.row.label(),
                         to_string(l.annotations.verdict), flags_string(l.annotations));
  return out;
}

std::string render_explanation(const Explanation& x) {
  const auto quad = [](const IntersectionQuadruple& q) {
    return fmt::format("(A^3, A^2E, AE^2, E^3) = ({}, {}, {}, {})", q.a, q.b, q.c, q.d);
  };
  const bool fibration = !is_divisorial(x.link.right.type);
  std::string out;
  out += fmt::format("link      {}  e={}\n", x.link.key(), x.link.e);
  out += fmt::format("pre-flop  {}\n", quad(x.pre_flop));
  out += fmt::format("post-flop {}\n", quad(x.post_flop));
  out += fmt::format("class     {} = {}\n", fibration ? "L" : "D", format_class(x.right_class));
  std::size_t width = 0;
  for (const auto& id : x.identities) width = std::max(width, id.name.size());
  for (const auto& id : x.identities)
    out += fmt::format("  {:<{}}  {} = {}  {}\n", id.name, width, id.lhs, id.rhs,
                       id.holds() ? "ok" : "FAIL");
  return out;
}

std::string render_classification(const Classification& c) {
  std::string out;
  out += fmt::format("genus {} midpoint (A^3 = {}), {} numerical links\n", c.genus,
                     2 * c.genus - 2, c.link_count);
  out += "non-factorial midpoints fall in one of these cases:\n";
  out += "  1. factorial\n";
  if (c.plane_case) out += "  2. contains a plane\n";
  if (c.del_pezzo_degree)
    out += fmt::format(
        "  3. midpoint of a link between two del Pezzo fibrations of degree {} "
        "(contains a degree-{} del Pezzo surface)\n",
        *c.del_pezzo_degree, *c.del_pezzo_degree);
  out += "  4. a small factorialisation is a conic bundle over P2, F0 or F2\n";
  out += "  5. contains a rational scroll over a curve C with (p_a(C), deg C) among:\n";
  for (const ScrollCentre& s : c.scrolls)
    out += fmt::format("       {:<8} {}\n", to_string(s.centre), family_list(s.families));
  out += fmt::format("max generator degree: {}\n", c.max_generator_degree);
  return out;
}

}  // namespace sarkisov
