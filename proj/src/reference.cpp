#include "sarkisov/reference.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <fmt/core.h>

#include "sarkisov/catalog.hpp"
#include "sarkisov/embedded_data.hpp"
#include "sarkisov/lattice.hpp"
#include "sarkisov/solver.hpp"

namespace sarkisov {
namespace {

constexpr std::size_t kColumns = 13;

constexpr RowId kAnomalies[] = {
    {ReferenceTable::T2, 5, 16}, {ReferenceTable::T2, 6, 13}, {ReferenceTable::T2, 7, 5},
    {ReferenceTable::T2, 7, 6},  {ReferenceTable::T2, 8, 6},
};

constexpr Erratum kErrata[] = {
    {{ReferenceTable::T2, 4, 2},
     "left_centre",
     "(1,6)",
     "(1,8)",
     "a genus-1 sextic on X_22 blows up to degree 10, not 6; the degree-8 curve gives the "
     "listed right side and e"},
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int v{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

struct TextLine {
  std::size_t number;
  std::string_view text;
};

std::vector<TextLine> data_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t n = 0;
  for (std::string_view line : split(text, '\n')) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back({n, line});
  }
  return out;
}

ReferenceRow parse_row(const TextLine& line, std::string_view source) {
  auto fail = [&](const std::string& what) -> ReferenceParseError {
    return ReferenceParseError(fmt::format("{}:{}: {}", source, line.number, what));
  };
  const auto f = split(line.text, '\t');
  if (f.size() != kColumns)
    throw fail(fmt::format("expected {} tab-separated fields, found {}", kColumns, f.size()));

  ReferenceRow row;
  if (f[0] == "T1") row.table = ReferenceTable::T1;
  else if (f[0] == "T2") row.table = ReferenceTable::T2;
  else throw fail(fmt::format("unknown table '{}'", f[0]));

  const auto genus = to_int<int>(f[1]);
  const auto row_id = to_int<int>(f[2]);
  const auto e = to_int<std::int64_t>(f[9]);
  if (!genus) throw fail(fmt::format("bad genus '{}'", f[1]));
  if (!row_id || *row_id < 1) throw fail(fmt::format("bad row number '{}'", f[2]));
  if (!e) throw fail(fmt::format("bad e '{}'", f[9]));
  row.genus = *genus;
  row.row_id = *row_id;
  row.e = *e;

  for (std::size_t i : {3u, 4u, 5u, 6u, 7u, 8u})
    if (f[i].empty()) throw fail(fmt::format("empty field {}", i + 1));
  row.left_type = f[3];
  row.left_target = f[4];
  row.left_centre = f[5];
  row.right_type = f[6];
  row.right_target = f[7];
  row.right_data = f[8];

  if (f[10] == "none") row.marker = Marker::none;
  else if (f[10] == "bullet") row.marker = Marker::bullet;
  else if (f[10] == "cross") row.marker = Marker::cross;
  else throw fail(fmt::format("unknown marker '{}'", f[10]));

  if (f[11] == "plus") row.r_column = Verdict::plus;
  else if (f[11] == "question") row.r_column = Verdict::question;
  else if (f[11] == "blank") row.r_column = Verdict::blank;
  else throw fail(fmt::format("unknown R value '{}'", f[11]));

  if (f[12] == "0") row.anomaly = false;
  else if (f[12] == "1") row.anomaly = true;
  else throw fail(fmt::format("anomaly must be 0 or 1, got '{}'", f[12]));
  return row;
}

struct ManifestEntry {
  std::string name;
  std::size_t rows;
  std::uint64_t checksum;
};

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  for (const TextLine& line : data_lines(text)) {
    const auto f = split(line.text, '\t');
    std::uint64_t sum = 0;
    const auto rows = f.size() == 3 ? to_int<std::size_t>(f[1]) : std::nullopt;
    const bool ok = rows && f[2].size() == 16 &&
                    std::from_chars(f[2].data(), f[2].data() + 16, sum, 16).ptr ==
                        f[2].data() + 16;
    if (!ok) throw ReferenceIntegrityError(fmt::format("manifest line {} is malformed", line.number));
    out.push_back({std::string(f[0]), *rows, sum});
  }
  return out;
}

auto row_order(const ReferenceRow& r) { return std::make_tuple(r.table, r.genus, r.row_id); }

template <typename ReadFile>
std::vector<ReferenceRow> load_checked(ReadFile read_file,
                                       const std::vector<std::string>& present_files) {
  const std::vector<ManifestEntry> manifest = parse_manifest(embedded::reference_manifest());
  for (const std::string& name : present_files) {
    const bool listed = std::any_of(manifest.begin(), manifest.end(),
                                    [&](const ManifestEntry& m) { return m.name == name; });
    if (!listed) throw ReferenceIntegrityError("table file " + name + " is not in the manifest");
  }

  std::vector<ReferenceRow> rows;
  for (const ManifestEntry& entry : manifest) {
    const std::optional<std::string> text = read_file(entry.name);
    if (!text) throw ReferenceIntegrityError("missing table file " + entry.name);
    std::vector<ReferenceRow> part = parse_reference_table(*text, entry.name);
    if (part.size() != entry.rows)
      throw ReferenceIntegrityError(fmt::format("{}: expected {} rows, found {}", entry.name,
                                                entry.rows, part.size()));
    if (fnv1a64(*text) != entry.checksum)
      throw ReferenceIntegrityError(fmt::format("{}: checksum {:016x} does not match manifest {:016x}",
                                                entry.name, fnv1a64(*text), entry.checksum));
    for (ReferenceRow& r : part) rows.push_back(std::move(r));
  }

  std::sort(rows.begin(), rows.end(),
            [](const ReferenceRow& l, const ReferenceRow& r) { return row_order(l) < row_order(r); });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (row_order(rows[i - 1]) == row_order(rows[i]))
      throw ReferenceIntegrityError("duplicate reference row " + rows[i].label());
  for (const ReferenceRow& r : rows)
    if (r.anomaly != is_anomaly(r))
      throw ReferenceIntegrityError(fmt::format("{}: anomaly flag {} disagrees with the anomaly list",
                                                r.label(), r.anomaly ? 1 : 0));
  return rows;
}

[[noreturn]] void conversion_failure(const ReferenceRow& row, const std::string& what) {
  throw ReferenceConversionError(row.label() + ": " + what);
}

const FanoFamily& family_named(const ReferenceRow& row, std::string_view name) {
  const FanoFamily* f = lookup_by_name(name);
  if (!f) conversion_failure(row, fmt::format("unknown family '{}'", name));
  return *f;
}

std::optional<CurveCentre> parse_centre(std::string_view s) {
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') return std::nullopt;
  const auto parts = split(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 2) return std::nullopt;
  const auto pa = to_int<std::int64_t>(parts[0]);
  const auto deg = to_int<std::int64_t>(parts[1]);
  if (!pa || !deg) return std::nullopt;
  return CurveCentre{*pa, *deg};
}

std::int64_t parse_aux(const ReferenceRow& row, std::string_view prefix) {
  const std::string_view data = row.right_data;
  if (data.substr(0, prefix.size()) != prefix)
    conversion_failure(row, fmt::format("expected '{}N', got '{}'", prefix, data));
  const auto v = to_int<std::int64_t>(data.substr(prefix.size()));
  if (!v) conversion_failure(row, fmt::format("cannot read '{}'", data));
  return *v;
}

ContractionSpec divisorial_side(const ReferenceRow& row, std::string_view type,
                                std::string_view target, std::string_view data) {
  ContractionSpec spec;
  spec.family = &family_named(row, target);
  const std::optional<CurveCentre> centre = parse_centre(data);
  if (type == "E1" || type == "E1/2") {
    if (!centre) conversion_failure(row, fmt::format("E1 side needs a centre, got '{}'", data));
    spec.type = (centre->pa == 0 && centre->deg_h == 0) ? ContractionType::E3E4 : ContractionType::E1;
    spec.centre = centre;
  } else if (type == "E2") {
    spec.type = ContractionType::E2;
  } else if (type == "E3") {
    spec.type = ContractionType::E3E4;
    spec.centre = CurveCentre{0, 0};
  } else {
    conversion_failure(row, fmt::format("unknown contraction label '{}'", type));
  }
  return spec;
}

ContractionSpec right_side(const ReferenceRow& row) {
  if (row.right_target == "P2")
    return {ContractionType::CB, nullptr, std::nullopt, parse_aux(row, "delta=")};
  if (row.right_target == "P1")
    return {ContractionType::dP, nullptr, std::nullopt, parse_aux(row, "k=")};
  return divisorial_side(row, row.right_type, row.right_target, row.right_data);
}

/// (A^2.D, A.D^2) of the right-side class, read off the right contraction.
std::pair<std::int64_t, std::int64_t> right_degrees(const ContractionSpec& s) {
  switch (s.type) {
    case ContractionType::E1: {
      const std::int64_t i = s.family->fano_index;
      return {i * s.centre->deg_h + 2 - 2 * s.centre->pa, 2 * s.centre->pa - 2};
    }
    case ContractionType::E2: return {4, -2};
    case ContractionType::E3E4: return {2, -2};
    case ContractionType::CB: return {kMaxDiscriminantDegree - *s.aux, 2};
    case ContractionType::dP: return {*s.aux, 0};
  }
  return {0, 0};
}

bool links_agree(const ReferenceSides& sides, std::int64_t e, const NumericalLink& link) {
  return link.e == e && same_spec(sides.left, link.left) && same_spec(sides.right, link.right);
}

}  // namespace

std::string_view to_string(ReferenceTable t) { return t == ReferenceTable::T1 ? "T1" : "T2"; }

std::string_view to_string(Marker m) {
  switch (m) {
    case Marker::none: return "none";
    case Marker::bullet: return "bullet";
    case Marker::cross: return "cross";
  }
  return "none";
}

std::string ReferenceRow::label() const {
  return fmt::format("{} g={} row {}", to_string(table), genus, row_id);
}

std::vector<ReferenceRow> parse_reference_table(std::string_view text, std::string_view source) {
  std::vector<ReferenceRow> rows;
  for (const TextLine& line : data_lines(text)) rows.push_back(parse_row(line, source));
  return rows;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<ReferenceRow> load_reference() {
  std::map<std::string, std::string_view, std::less<>> files;
  std::vector<std::string> names;
  for (const embedded::DataFile& f : embedded::reference_files()) {
    files.emplace(std::string(f.name), f.text);
    names.emplace_back(f.name);
  }
  return load_checked(
      [&](const std::string& name) -> std::optional<std::string> {
        const auto it = files.find(name);
        if (it == files.end()) return std::nullopt;
        return std::string(it->second);
      },
      names);
}

std::vector<ReferenceRow> load_reference(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw ReferenceIntegrityError("reference directory " + dir.string() + " does not exist");
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tsv")
      names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  return load_checked(
      [&](const std::string& name) -> std::optional<std::string> {
        std::ifstream in(dir / name, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
      },
      names);
}

std::string serialize(const std::vector<ReferenceRow>& rows) {
  std::string out;
  for (const ReferenceRow& r : rows) {
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", to_string(r.table),
                       r.genus, r.row_id, r.left_type, r.left_target, r.left_centre,
                       r.right_type, r.right_target, r.right_data, r.e, to_string(r.marker),
                       r.r_column == Verdict::plus       ? "plus"
                       : r.r_column == Verdict::question ? "question"
                                                         : "blank",
                       r.anomaly ? 1 : 0);
  }
  return out;
}

std::string canonical_form(std::string_view text) {
  std::string out;
  for (const TextLine& line : data_lines(text)) {
    out += line.text;
    out += '\n';
  }
  return out;
}

std::span<const RowId> anomaly_rows() { return kAnomalies; }

bool is_anomaly(const ReferenceRow& row) {
  const RowId id{row.table, row.genus, row.row_id};
  return std::find(std::begin(kAnomalies), std::end(kAnomalies), id) != std::end(kAnomalies);
}

std::span<const Erratum> errata() { return kErrata; }

const Erratum* find_erratum(const ReferenceRow& row) {
  const RowId id{row.table, row.genus, row.row_id};
  for (const Erratum& e : kErrata)
    if (e.row == id) return &e;
  return nullptr;
}

ReferenceRow corrected(const ReferenceRow& row) {
  ReferenceRow out = row;
  const Erratum* e = find_erratum(row);
  if (!e) return out;
  std::string* field = e->field == "left_centre"   ? &out.left_centre
                       : e->field == "right_data"  ? &out.right_data
                       : e->field == "left_target" ? &out.left_target
                                                   : nullptr;
  if (field && *field == e->printed) *field = std::string(e->corrected);
  return out;
}

std::vector<ReferenceSides> reference_sides(const ReferenceRow& row) {
  const ContractionSpec right = right_side(row);
  std::vector<ReferenceSides> out;
  for (std::string_view target : split(row.left_target, '/'))
    out.push_back({divisorial_side(row, row.left_type, target, row.left_centre), right});
  return out;
}

std::vector<NumericalLink> reference_links(const ReferenceRow& row) {
  std::vector<NumericalLink> out;
  for (const ReferenceSides& sides : reference_sides(row)) {
    IntersectionQuadruple q;
    try {
      q = left_quadruple(sides.left);
    } catch (const std::invalid_argument& ex) {
      conversion_failure(row, ex.what());
    }
    if (q.a != 2 * static_cast<std::int64_t>(row.genus) - 2)
      conversion_failure(row, fmt::format("left side gives A^3 = {}, not 2g - 2 = {}", q.a,
                                          2 * row.genus - 2));

    // With D = xA - yE: a(A.D^2) - (A^2.D)^2 = (ac - b^2) y^2 and A^2.D = xa - yb.
    const auto [n2, n1] = right_degrees(sides.right);
    const std::int64_t den = checked_sub(checked_mul(q.a, q.c), checked_mul(q.b, q.b));
    const std::int64_t num = checked_sub(checked_mul(q.a, n1), checked_mul(n2, n2));
    if (den == 0 || num % den != 0 || num / den <= 0)
      conversion_failure(row, "right side admits no class with y >= 1");
    const std::int64_t y = isqrt(num / den);
    if (y * y != num / den) conversion_failure(row, "y^2 is not a square");
    const std::int64_t xa = checked_add(n2, checked_mul(y, q.b));
    if (xa % q.a != 0) conversion_failure(row, "x is not integral");

    NumericalLink link;
    link.genus = row.genus;
    link.left = sides.left;
    link.right = sides.right;
    link.e = row.e;
    link.coordinates = {xa / q.a, y};
    out.push_back(std::move(link));
  }
  return out;
}

bool annotations_agree(const ReferenceRow& row, const NumericalLink& link) {
  const auto& flags = link.annotations.flags;
  const bool excluded = flags.count(Flag::excluded) > 0;
  const bool known = flags.count(Flag::known_construction) > 0;
  const bool marker_ok = (row.marker == Marker::cross) == excluded &&
                         (row.marker == Marker::bullet) == known;
  return marker_ok && row.r_column == link.annotations.verdict;
}

DiffReport diff(const std::vector<ReferenceRow>& reference,
                const std::vector<NumericalLink>& computed) {
  DiffReport report;
  std::vector<bool> used(computed.size(), false);

  auto try_match = [&](const ReferenceRow& row) -> std::optional<RowMatch> {
    std::vector<ReferenceSides> sides;
    try {
      sides = reference_sides(row);
    } catch (const ReferenceConversionError&) {
      return std::nullopt;
    }
    RowMatch match{row, {}, nullptr};
    std::vector<std::size_t> hits;
    for (const ReferenceSides& s : sides) {
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < computed.size() && !hit; ++i)
        if (computed[i].genus == row.genus && links_agree(s, row.e, computed[i])) hit = i;
      if (!hit) return std::nullopt;
      hits.push_back(*hit);
    }
    for (std::size_t i : hits) {
      used[i] = true;
      match.links.push_back(computed[i]);
    }
    return match;
  };

  for (const ReferenceRow& row : reference) {
    std::optional<RowMatch> match = try_match(row);
    if (match) {
      report.matched.push_back(*match);
    } else if (const Erratum* erratum = find_erratum(row);
               erratum && (match = try_match(corrected(row)))) {
      match->row = row;
      match->erratum = erratum;
      report.matched_with_erratum.push_back(*match);
    } else if (is_anomaly(row)) {
      report.missing_anomalies.push_back(row);
      continue;
    } else {
      report.missing.push_back(row);
      continue;
    }
    const RowMatch& m = match->erratum ? report.matched_with_erratum.back() : report.matched.back();
    for (const NumericalLink& link : m.links)
      if (!annotations_agree(row, link)) {
        report.annotation_mismatches.push_back(m);
        break;
      }
  }

  for (std::size_t i = 0; i < computed.size(); ++i)
    if (!used[i]) report.unlisted.push_back(computed[i]);
  return report;
}

}  // namespace sarkisov
