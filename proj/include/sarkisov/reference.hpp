#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sarkisov/link.hpp"

namespace sarkisov {

enum class ReferenceTable { T1, T2 };
enum class Marker { none, bullet, cross };

std::string_view to_string(ReferenceTable t);
std::string_view to_string(Marker m);

/// One row of the published link tables, kept verbatim as text so that
/// transcription choices (labels, slashes, typos) survive loading.
struct ReferenceRow {
  ReferenceTable table = ReferenceTable::T1;
  int genus = 0;
  int row_id = 0;
  std::string left_type;
  std::string left_target;
  std::string left_centre;
  std::string right_type;
  std::string right_target;
  std::string right_data;
  std::int64_t e = 0;
  Marker marker = Marker::none;
  Verdict r_column = Verdict::question;
  bool anomaly = false;

  /// "T1 g=3 row 5".
  std::string label() const;
  friend bool operator==(const ReferenceRow&, const ReferenceRow&) = default;
};

class ReferenceParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReferenceIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row that cannot be turned into a link (unknown label, or data that no
/// integral class satisfies).
class ReferenceConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one table file. `source` prefixes error messages ("t1_g3.tsv:7: ...").
std::vector<ReferenceRow> parse_reference_table(std::string_view text, std::string_view source);

/// Bundled tables, checked against the bundled manifest (row counts and
/// FNV-1a checksums) and sorted by (table, genus, row).
std::vector<ReferenceRow> load_reference();
/// Same checks, with the table files read from `dir`.
std::vector<ReferenceRow> load_reference(const std::filesystem::path& dir);

std::uint64_t fnv1a64(std::string_view bytes);

/// Data lines in file order, tab separated, without comments.
std::string serialize(const std::vector<ReferenceRow>& rows);
/// The comment- and blank-free form of a table file that serialize reproduces.
std::string canonical_form(std::string_view text);

struct RowId {
  ReferenceTable table;
  int genus;
  int row_id;
  friend bool operator==(const RowId&, const RowId&) = default;
};

/// Rows whose printed numbers satisfy none of the link systems.
std::span<const RowId> anomaly_rows();
bool is_anomaly(const ReferenceRow& row);

/// A misprint fixed before comparison; the transcription itself stays verbatim.
struct Erratum {
  RowId row;
  std::string_view field;
  std::string_view printed;
  std::string_view corrected;
  std::string_view reason;
};

std::span<const Erratum> errata();
const Erratum* find_erratum(const ReferenceRow& row);
/// `row` with its erratum applied, if any.
ReferenceRow corrected(const ReferenceRow& row);

/// Left/right contractions named by a row. A slash in the left target yields
/// one entry per alternative. Table labels are normalised: P1 and P2 targets
/// are fibrations whatever the type column says, "E1/2" reads as E1, and a
/// (0,0) centre or an E3 label means E3E4.
struct ReferenceSides {
  ContractionSpec left;
  ContractionSpec right;
};
std::vector<ReferenceSides> reference_sides(const ReferenceRow& row);

/// reference_sides with the right class solved from the row's data. Throws
/// ReferenceConversionError when no integral class exists.
std::vector<NumericalLink> reference_links(const ReferenceRow& row);

bool annotations_agree(const ReferenceRow& row, const NumericalLink& link);

struct RowMatch {
  ReferenceRow row;
  std::vector<NumericalLink> links;
  const Erratum* erratum = nullptr;
};

struct DiffReport {
  std::vector<RowMatch> matched;
  std::vector<RowMatch> matched_with_erratum;
  std::vector<ReferenceRow> missing;
  std::vector<ReferenceRow> missing_anomalies;
  std::vector<NumericalLink> unlisted;
  /// Matched rows whose R column or marker disagrees with the link's annotations.
  std::vector<RowMatch> annotation_mismatches;

  bool success() const { return missing.empty(); }
};

/// Matches rows against links on types, targets, centre data and e.
DiffReport diff(const std::vector<ReferenceRow>& reference,
                const std::vector<NumericalLink>& computed);

}  // namespace sarkisov
