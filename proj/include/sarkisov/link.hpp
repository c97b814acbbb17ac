#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "sarkisov/contractions.hpp"
#include "sarkisov/lattice.hpp"

namespace sarkisov {

/// Rationality verdict of the link's midpoint, as in the R column of the
/// published tables.
enum class Verdict { question, plus, blank };

std::string_view to_string(Verdict v);  // "?", "+", ""

/// Decorations attached by the annotator and the reference diff.
enum class Flag {
  excluded,            // numerically valid but not geometrically realizable
  known_construction,  // a known geometric realization exists
  unlisted,            // absent from the published tables
  dp_degree_cap,       // del Pezzo fibre degree sits on the cap 9
};

std::string_view to_string(Flag f);

struct Annotations {
  Verdict verdict = Verdict::question;
  std::set<Flag> flags;
  std::string note;

  friend bool operator==(const Annotations&, const Annotations&) = default;
};

/// One numerical Sarkisov link centred on an index-1 midpoint of genus
/// `genus`. `coordinates` expresses the right-side class (exceptional divisor
/// or fibration pullback) as x*A - y*E~ on the flopped model.
struct NumericalLink {
  int genus = 0;
  ContractionSpec left;
  ContractionSpec right;
  std::int64_t e = 0;
  DivisorClass coordinates;
  Annotations annotations;

  std::int64_t midpoint_degree() const { return 2 * static_cast<std::int64_t>(genus) - 2; }
  /// "E1-E1" style pair.
  std::string types() const;
  /// Stable textual identity, e.g. "g=3 E2 X_12 - -> E1 X_10 (0,2)".
  std::string key() const;
};

/// Numerical content only; annotations are ignored.
bool same_numerics(const NumericalLink& lhs, const NumericalLink& rhs);

}  // namespace sarkisov
