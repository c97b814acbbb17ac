#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sarkisov {

/// A deformation family of terminal Gorenstein Fano 3-folds of Picard rank 1.
///
/// `a_cubed` is the anticanonical degree (-K)^3 = fano_index^3 * h_cubed. For
/// index-1 families the genus g satisfies a_cubed = 2g - 2.
struct FanoFamily {
  int fano_index = 0;
  std::int64_t h_cubed = 0;
  std::int64_t a_cubed = 0;
  std::optional<int> genus;
  std::string canonical_name;
  std::vector<std::string> aliases;

  /// Name used in link tables: the complete-intersection alias when one
  /// exists (X_{2,3}, X_{2,2,2}), otherwise the canonical name.
  const std::string& table_name() const {
    return aliases.empty() ? canonical_name : aliases.front();
  }

  bool has_name(std::string_view name) const;

  friend bool operator==(const FanoFamily& lhs, const FanoFamily& rhs) {
    return lhs.fano_index == rhs.fano_index && lhs.a_cubed == rhs.a_cubed;
  }
};

/// The 17 families, ordered by index then anticanonical degree. The storage is
/// static, so references into it stay valid for the life of the program.
std::span<const FanoFamily> all_families();

/// Every family with the given anticanonical degree (possibly none, possibly
/// several of different index).
std::vector<const FanoFamily*> lookup_by_degree(std::int64_t a_cubed);

/// Throws std::invalid_argument unless 1 <= fano_index <= 4.
const FanoFamily* lookup_by_index_and_degree(int fano_index, std::int64_t a_cubed);

/// Resolves canonical names and aliases; nullptr when unknown.
const FanoFamily* lookup_by_name(std::string_view name);

}  // namespace sarkisov
