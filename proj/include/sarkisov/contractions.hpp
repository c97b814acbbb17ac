#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sarkisov/catalog.hpp"
#include "sarkisov/lattice.hpp"

namespace sarkisov {

/// Extremal contraction kinds that can close one side of a link. E3 and E4
/// share a tag since their numerics agree; E5 (non-Gorenstein target) has none.
enum class ContractionType { E1, E2, E3E4, CB, dP };

std::string_view to_string(ContractionType t);
std::optional<ContractionType> parse_contraction_type(std::string_view s);

constexpr bool is_divisorial(ContractionType t) {
  return t == ContractionType::E1 || t == ContractionType::E2 || t == ContractionType::E3E4;
}

/// Centre curve of an E1 contraction: arithmetic genus and degree against
/// the ample generator H of the target. (0, 0) stands for E3/E4.
struct CurveCentre {
  std::int64_t pa = 0;
  std::int64_t deg_h = 0;

  friend auto operator<=>(const CurveCentre&, const CurveCentre&) = default;
};

std::string to_string(const CurveCentre& c);  // "(pa,deg)"

/// One side of a link. `family` is set for divisorial kinds and null for the
/// fibrations, whose base is implied by the type (P2 for CB, P1 for dP).
/// `aux` is deg(Delta) for CB and the generic fibre degree for dP.
struct ContractionSpec {
  ContractionType type = ContractionType::E1;
  const FanoFamily* family = nullptr;
  std::optional<CurveCentre> centre;
  std::optional<std::int64_t> aux;

  std::string target_name() const;
  /// Centre "(pa,deg)", "delta=N", "k=N" or "-".
  std::string data_string() const;
};

bool same_spec(const ContractionSpec& lhs, const ContractionSpec& rhs);

class InvalidMidpoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BoundsMode { paper, relaxed };

std::string_view to_string(BoundsMode m);
std::optional<BoundsMode> parse_bounds_mode(std::string_view s);

/// Intersection quadruple of the midpoint model carrying the exceptional
/// divisor of `spec` (E1, E2 or E3E4). Throws InvalidMidpoint when the result
/// is not a genus >= 3 index-1 midpoint or violates A^2.E > 1.
IntersectionQuadruple left_quadruple(const ContractionSpec& spec);

/// Centres (pa, deg) of E1 contractions to `target` whose blow-up has
/// anticanonical degree `midpoint_a`. BoundsMode::paper adds the sharper genus
/// bounds known at midpoint degree 4.
std::vector<CurveCentre> enumerate_left_centres(std::int64_t midpoint_a,
                                                const FanoFamily& target, BoundsMode mode);

}  // namespace sarkisov
