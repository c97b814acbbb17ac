#include "sarkisov/contractions.hpp"

#include <array>

namespace sarkisov {
namespace {

constexpr std::array<std::pair<ContractionType, std::string_view>, 5> kTypeNames{{
    {ContractionType::E1, "E1"},
    {ContractionType::E2, "E2"},
    {ContractionType::E3E4, "E3E4"},
    {ContractionType::CB, "CB"},
    {ContractionType::dP, "dP"},
}};

// Sharper genus bounds for curves blown up from a midpoint of degree 4.
bool within_degree_four_bounds(const FanoFamily& target, std::int64_t pa) {
  switch (target.fano_index) {
    case 1:
      return pa <= *target.genus - 1;
    case 2: {
      const std::int64_t d = target.h_cubed;
      return pa % 2 == 1 && (pa - 1) / 2 <= 2 * d - 1;
    }
    case 3:
      return pa % 3 == 0 && pa / 3 <= 9;
    case 4:
      return (pa + 1) % 4 == 0 && (pa + 1) / 4 <= 7;
  }
  return false;
}

}  // namespace

std::string_view to_string(ContractionType t) {
  for (const auto& [type, name] : kTypeNames)
    if (type == t) return name;
  return "?";
}

std::optional<ContractionType> parse_contraction_type(std::string_view s) {
  for (const auto& [type, name] : kTypeNames)
    if (name == s) return type;
  return std::nullopt;
}

std::string to_string(const CurveCentre& c) {
  return "(" + std::to_string(c.pa) + "," + std::to_string(c.deg_h) + ")";
}

std::string ContractionSpec::target_name() const {
  if (family) return family->table_name();
  if (type == ContractionType::CB) return "P2";
  if (type == ContractionType::dP) return "P1";
  return "?";
}

std::string ContractionSpec::data_string() const {
  switch (type) {
    case ContractionType::E1:
    case ContractionType::E3E4:
      return centre ? to_string(*centre) : "-";
    case ContractionType::E2:
      return "-";
    case ContractionType::CB:
      return aux ? "delta=" + std::to_string(*aux) : "-";
    case ContractionType::dP:
      return aux ? "k=" + std::to_string(*aux) : "-";
  }
  return "-";
}

bool same_spec(const ContractionSpec& lhs, const ContractionSpec& rhs) {
  const bool families_match =
      (lhs.family == nullptr && rhs.family == nullptr) ||
      (lhs.family != nullptr && rhs.family != nullptr && *lhs.family == *rhs.family);
  return lhs.type == rhs.type && families_match && lhs.centre == rhs.centre &&
         lhs.aux == rhs.aux;
}

std::string_view to_string(BoundsMode m) { return m == BoundsMode::paper ? "paper" : "relaxed"; }

std::optional<BoundsMode> parse_bounds_mode(std::string_view s) {
  if (s == "paper") return BoundsMode::paper;
  if (s == "relaxed") return BoundsMode::relaxed;
  return std::nullopt;
}

IntersectionQuadruple left_quadruple(const ContractionSpec& spec) {
  if (spec.family == nullptr)
    throw InvalidMidpoint("left contraction needs a target family");
  const FanoFamily& target = *spec.family;
  IntersectionQuadruple q;
  switch (spec.type) {
    case ContractionType::E1: {
      if (!spec.centre || spec.centre->deg_h < 1)
        throw InvalidMidpoint("E1 contraction needs a centre of positive degree");
      const std::int64_t pa = spec.centre->pa;
      const std::int64_t a_gamma = checked_mul(target.fano_index, spec.centre->deg_h);
      q.a = checked_add(checked_sub(checked_sub(target.a_cubed, checked_mul(2, a_gamma)), 2),
                        checked_mul(2, pa));
      q.b = checked_sub(checked_add(a_gamma, 2), checked_mul(2, pa));
      q.c = checked_sub(checked_mul(2, pa), 2);
      q.d = checked_sub(checked_add(-a_gamma, 2), checked_mul(2, pa));
      break;
    }
    case ContractionType::E3E4:
      q = {checked_sub(target.a_cubed, 2), 2, -2, 2};
      break;
    case ContractionType::E2:
      q = {checked_sub(target.a_cubed, 8), 4, -2, 1};
      break;
    default:
      throw InvalidMidpoint("left contraction must be E1, E2 or E3E4");
  }
  if (q.a < 4 || q.a % 2 != 0)
    throw InvalidMidpoint("not a valid index-1 midpoint: A^3 = " + std::to_string(q.a));
  if (q.b <= 1)
    throw InvalidMidpoint("exceptional divisor violates A^2.E > 1: A^2.E = " +
                          std::to_string(q.b));
  return q;
}

std::vector<CurveCentre> enumerate_left_centres(std::int64_t midpoint_a,
                                                const FanoFamily& target, BoundsMode mode) {
  if (midpoint_a < 4 || midpoint_a % 2 != 0)
    throw std::invalid_argument("midpoint degree must be even and >= 4");
  const std::int64_t i = target.fano_index;
  std::vector<CurveCentre> out;
  // b = i*deg + 2 - 2pa >= 2 and i*deg <= A^3 bound pa by A^3 / 2.
  for (std::int64_t pa = 0; 2 * pa <= target.a_cubed; ++pa) {
    const std::int64_t twice_a_gamma = target.a_cubed - midpoint_a - 2 + 2 * pa;
    if (twice_a_gamma <= 0 || twice_a_gamma % (2 * i) != 0) continue;
    const std::int64_t deg = twice_a_gamma / (2 * i);
    if (i * deg > target.a_cubed) continue;
    if (i * deg + 2 - 2 * pa < 2) continue;
    if (mode == BoundsMode::paper && midpoint_a == 4 && !within_degree_four_bounds(target, pa))
      continue;
    out.push_back({pa, deg});
  }
  return out;
}

}  // namespace sarkisov
