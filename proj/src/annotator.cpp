#include "sarkisov/annotator.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "sarkisov/catalog.hpp"
#include "sarkisov/embedded_data.hpp"

namespace sarkisov {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw FactBaseError(fmt::format("fact base line {}: {}", line, what));
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    fail(line, fmt::format("expected an integer, got '{}'", s));
  return v;
}

std::string family_name(std::string_view s, std::size_t line) {
  const FanoFamily* f = lookup_by_name(s);
  if (!f) fail(line, fmt::format("unknown family '{}'", s));
  return f->table_name();
}

Override parse_override(std::string_view spec, std::string provenance, std::size_t line) {
  Override o;
  o.provenance = std::move(provenance);
  std::istringstream in{std::string(spec)};
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail(line, fmt::format("expected name=value, got '{}'", item));
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (name == "verdict") {
      if (value == "+") o.verdict = Verdict::plus;
      else if (value == "?") o.verdict = Verdict::question;
      else if (value == "blank") o.verdict = Verdict::blank;
      else fail(line, fmt::format("unknown verdict '{}'", value));
    } else if (name == "flag") {
      if (value == "excluded") o.flags.insert(Flag::excluded);
      else if (value == "known") o.flags.insert(Flag::known_construction);
      else fail(line, fmt::format("unknown flag '{}'", value));
    } else {
      fail(line, fmt::format("unknown override field '{}'", name));
    }
  }
  if (!o.verdict && o.flags.empty()) fail(line, "override assigns nothing");
  return o;
}

bool is_rational_family(const ContractionSpec& side, const FactBase& facts) {
  return side.family && facts.rational_families.count(side.family->table_name()) > 0;
}

}  // namespace

void FactBase::validate() const {
  if (cb_rational_max_delta >= cb_nonrational_min_delta)
    throw FactBaseError(fmt::format(
        "cb_rational_max_delta ({}) must be below cb_nonrational_min_delta ({})",
        cb_rational_max_delta, cb_nonrational_min_delta));
  for (const auto& [name, _] : rational_families)
    if (nonrational_families.count(name))
      throw FactBaseError(fmt::format("family {} is listed as rational and nonrational", name));
}

FactBase parse_fact_base(std::string_view text) {
  FactBase facts;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::string provenance;
    if (const auto semi = line.find(" ; "); semi != std::string_view::npos) {
      provenance = std::string(trim(line.substr(semi + 3)));
      line = trim(line.substr(0, semi));
    }
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos) fail(line_no, fmt::format("missing value for '{}'", line));
    const std::string_view field = line.substr(0, sp);
    const std::string_view value = trim(line.substr(sp + 1));

    if (field == "rational_families") {
      facts.rational_families[family_name(value, line_no)] = provenance;
    } else if (field == "nonrational_families") {
      facts.nonrational_families[family_name(value, line_no)] = provenance;
    } else if (field == "cb_rational_max_delta") {
      facts.cb_rational_max_delta = parse_int(value, line_no);
      facts.threshold_provenance[std::string(field)] = provenance;
    } else if (field == "cb_nonrational_min_delta") {
      facts.cb_nonrational_min_delta = parse_int(value, line_no);
      facts.threshold_provenance[std::string(field)] = provenance;
    } else if (field == "dp_rational_min_degree") {
      facts.dp_rational_min_degree = parse_int(value, line_no);
      facts.threshold_provenance[std::string(field)] = provenance;
    } else if (field == "overrides") {
      const auto bar = value.find(" | ");
      if (bar == std::string_view::npos) fail(line_no, "override needs '<key> | <assignments>'");
      const std::string key(trim(value.substr(0, bar)));
      if (facts.overrides.count(key)) fail(line_no, fmt::format("duplicate override '{}'", key));
      facts.overrides[key] = parse_override(value.substr(bar + 3), provenance, line_no);
    } else {
      fail(line_no, fmt::format("unknown field '{}'", field));
    }
  }
  facts.validate();
  return facts;
}

FactBase load_fact_base(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FactBaseError("cannot read fact base " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fact_base(buf.str());
}

const FactBase& default_fact_base() {
  static const FactBase facts = parse_fact_base(embedded::default_facts());
  return facts;
}

NumericalLink annotate(NumericalLink link, const FactBase& facts) {
  Annotations& out = link.annotations;
  out.flags.erase(Flag::excluded);
  out.flags.erase(Flag::known_construction);
  out.note.clear();

  const bool rational_endpoint =
      is_rational_family(link.left, facts) || is_rational_family(link.right, facts);
  const bool rational_fibration =
      (link.right.type == ContractionType::dP && link.right.aux &&
       *link.right.aux >= facts.dp_rational_min_degree) ||
      (link.right.type == ContractionType::CB && link.right.aux &&
       *link.right.aux <= facts.cb_rational_max_delta);
  out.verdict = rational_endpoint || rational_fibration ? Verdict::plus : Verdict::question;

  // A conic bundle that cannot be rational opposite a rational family.
  if (link.right.type == ContractionType::CB && link.right.aux &&
      *link.right.aux >= facts.cb_nonrational_min_delta && is_rational_family(link.left, facts))
    out.flags.insert(Flag::excluded);

  if (const auto it = facts.overrides.find(link.key()); it != facts.overrides.end()) {
    if (it->second.verdict) out.verdict = *it->second.verdict;
    out.flags.insert(it->second.flags.begin(), it->second.flags.end());
    out.note = it->second.provenance;
  }
  return link;
}

std::optional<Verdict> dp4_euler_verdict(std::optional<std::int64_t> euler_characteristic) {
  if (!euler_characteristic) return std::nullopt;
  const std::int64_t chi = *euler_characteristic;
  return chi == -8 || chi == -4 || chi == 0 ? Verdict::plus : Verdict::question;
}

}  // namespace sarkisov
