#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sarkisov/link.hpp"

namespace sarkisov {

/// Verdict and flag forced onto one link, keyed by NumericalLink::key().
struct Override {
  std::optional<Verdict> verdict;
  std::set<Flag> flags;
  std::string provenance;
};

/// Rationality facts driving annotate(). Every entry keeps the provenance text
/// it was loaded with. Family sets are keyed by table name (X_{2,3}, V_5, ...).
struct FactBase {
  std::map<std::string, std::string> rational_families;
  std::map<std::string, std::string> nonrational_families;
  std::int64_t cb_rational_max_delta = 5;
  std::int64_t cb_nonrational_min_delta = 6;
  std::int64_t dp_rational_min_degree = 5;
  std::map<std::string, std::string> threshold_provenance;
  std::map<std::string, Override> overrides;

  /// Throws FactBaseError when the thresholds overlap or a family is listed
  /// as both rational and nonrational.
  void validate() const;
};

class FactBaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the line format of data/facts/default.facts. Errors name the line.
FactBase parse_fact_base(std::string_view text);
FactBase load_fact_base(const std::filesystem::path& path);
/// The shipped fact base, compiled into the library.
const FactBase& default_fact_base();

/// Returns `link` with its verdict set and excluded/known flags added.
/// Numeric fields and unrelated flags are left untouched.
NumericalLink annotate(NumericalLink link, const FactBase& facts);

/// Degree-4 del Pezzo fibrations are rational exactly when the Euler
/// characteristic of the total space is -8, -4 or 0. Nothing in the pipeline
/// supplies it, so this is never applied automatically; nullopt without input.
std::optional<Verdict> dp4_euler_verdict(std::optional<std::int64_t> euler_characteristic);

}  // namespace sarkisov
